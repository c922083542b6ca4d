import csv
import json
import os

import openpyxl
import pytest

from Harness import Harness
from harness.BenchConfig import BenchConfig
from harness.BenchReport import BenchReport
from harness.DataStructures import SortedLinkedList, Stack, conservation, listOp, stackOp
from harness.LatencyRecorder import LatencyRecorder, nearestRank, percentile, percentileKey
from harness.ReportChecks import ReportChecks
from harness.Reporter import Reporter
from harness.Workload import Workload, WorkloadResult, Worker, epochLengths
from harness.scenarios.ContentionSweep import ContentionSweep
from harness.scenarios.SloSweep import SloSweep
from harness.scenarios.VariableLoad import VariableLoad
from amp.CoreType import CoreClass
from locks.FifoQueueLock import FifoQueueLock
from utils.Config import Config
from utils.Errors import CalibrationError, ConfigurationError, EmptyRecorderError, WorkerError
import constants as _C


def recorderOf(values, coreClass = None):
    r = LatencyRecorder(coreClass)
    for v in values:
        r.record(v)
    return r


def test_nearest_rank_examples():
    assert nearestRank(list(range(1, 101)), 99) == 99
    assert nearestRank([5], 99) == 5
    assert nearestRank(list(range(1, 11)), 50) == 5
    assert nearestRank(list(range(1, 1001)), 99.9) == 999
    assert nearestRank([3, 1, 2], 100) == 3
    assert percentile(recorderOf(range(1, 101)), 99) == 99


def test_nearest_rank_rejects():
    with pytest.raises(EmptyRecorderError):
        nearestRank([], 99)
    with pytest.raises(ValueError):
        nearestRank([1], 0)
    with pytest.raises(ValueError):
        nearestRank([1], 101)


def test_percentile_keys():
    assert percentileKey(99) == 'p99'
    assert percentileKey(99.9) == 'p99.9'
    r = recorderOf(range(1, 1001))
    assert r.percentiles(_C.PERCENTILES) == {'p50': 500, 'p90': 900, 'p99': 990, 'p99.9': 999}
    assert LatencyRecorder().percentiles(_C.PERCENTILES) == {}


def test_cdf_shape():
    r = recorderOf([5, 1, 1, 3, 9, 9, 9, 2])
    cdf = r.cdf()
    assert [x for x, _ in cdf] == [1, 2, 3, 5, 9]
    fractions = [f for _, f in cdf]
    assert fractions == sorted(fractions)
    assert fractions[0] == 0.25
    assert fractions[-1] == 1.0

    big = recorderOf(range(10000)).cdf(maxPoints=50)
    assert len(big) <= 50
    assert big[-1] == [9999, 1.0]
    assert LatencyRecorder().cdf() == []


def test_recorder_merge_trim_and_violations():
    a = recorderOf([10, 20, 30, 40, 50, 60, 70, 80, 90, 100])
    assert a.trimWarmup(0.2) == 2
    assert a.samples[0] == 30 and a.seen == 8
    merged = LatencyRecorder.merge([a, recorderOf([1000])])
    assert len(merged) == 9 and merged.seen == 9
    assert merged.violationFraction(100) == pytest.approx(1 / 9)
    assert merged.mean() == pytest.approx((sum(range(30, 101, 10)) + 1000) / 9)
    with pytest.raises(EmptyRecorderError):
        LatencyRecorder().mean()


def test_reservoir_keeps_capacity():
    r = LatencyRecorder(mode=LatencyRecorder.MODE_RESERVOIR, capacity=100, seed=1)
    for i in range(10000):
        r.record(i)
    assert len(r) == 100
    assert r.seen == 10000
    assert r.trimWarmup(0.5) == 0
    with pytest.raises(ValueError):
        LatencyRecorder(mode='sometimes')


def test_bench_config_mix():
    cfg = BenchConfig(mix='1:0.5,100:0.5')
    assert cfg.mix == [[1, 0.5], [100, 0.5]]
    assert cfg.threads == 8
    assert cfg.derive(nLittle=0).threads == 4


@pytest.mark.parametrize('kwargs', [
    {'mix': '1:0.5,100:0.4'}, {'mix': '1-0.5'}, {'mix': '0:1'}, {'nBig': 0, 'nLittle': 0},
    {'nBig': -1}, {'durationS': 0}, {'lock': 'spinny'}, {'scenario': 'unknown'}, {'pct': 100},
    {'nested': 0}, {'oversubscription': 0}, {'inflation': 0.9}, {'structure': 'tree'}, {'sloNs': -1},
    {'standby': 'nap'}, {'inner': 'asl'}
])
def test_bench_config_rejects(kwargs):
    with pytest.raises(ConfigurationError):
        BenchConfig(**kwargs)


def test_bench_config_from_options():
    Config.set('pct', 90)
    cfg = BenchConfig.fromOptions({'lock': 'mcs', 'big': 2, 'little': 0, 'slo_ns': 'max', 'values': '3000,1000', 'mix': None})
    assert (cfg.lock, cfg.nBig, cfg.nLittle, cfg.sloNs, cfg.pct) == ('mcs', 2, 0, None, 90)
    assert cfg.sweepValues == [3000, 1000]
    assert BenchConfig.fromOptions({'slo_ns': '70000'}).sloNs == 70000
    with pytest.raises(ConfigurationError):
        BenchConfig.parseSlo('fast')

    cfg = BenchConfig.fromOptions({'standby': 'sleep', 'inner': 'ticket'})
    assert (cfg.standby, cfg.inner) == ('sleep', 'ticket')
    assert BenchConfig.fromOptions({}).standby == 'spin'


def test_epoch_lengths_are_seeded():
    cfg = BenchConfig(mix='1:0.5,100:0.5', seed=42)
    first = epochLengths(cfg, 3, 200)
    assert first == epochLengths(cfg, 3, 200)
    assert first != epochLengths(cfg, 4, 200)
    assert set(first) == {cfg.csNs, 100 * cfg.csNs}
    assert first != epochLengths(cfg.derive(seed=43), 3, 200)


def test_stack_and_list():
    s = Stack()
    s.push(1)
    s.push(2)
    assert s.pop() == 2 and s.pop() == 1 and s.pop() is None
    linked = SortedLinkedList()
    for k in [5, 1, 3, 3, 9]:
        linked.insert(k)
    assert linked.keys() == [1, 3, 5, 9]
    assert linked.remove(3) and not linked.remove(4)
    assert linked.isSorted() and len(linked) == 3


def test_structure_ops_conserve_counts():
    workers = [Worker(i, CoreClass.BIG, i) for i in range(3)]
    s, linked = Stack(), SortedLinkedList()
    for _ in range(500):
        for w in workers:
            stackOp(s, w)
            listOp(linked, w, keySpace=64)
    assert conservation(workers, 'push', 'pop', len(s))[0]
    assert conservation(workers, 'insert', 'remove', len(linked))[0]
    assert not conservation(workers, 'push', 'pop', len(s) + 1)[0]


def handReport(**kw):
    report = BenchReport(scenario='fixed', lock='asl', config={'nBig': 1, 'nLittle': 1, 'pct': 99}, completed=4,
                         perThreadCounts=[3, 1], recorded=4, sloNs=1000, violationFraction=0.0)
    report.throughput = {'big': 3.0, 'little': 1.0, 'overall': 4.0}
    report.acquisitions = {'big': 3, 'little': 1}
    report.percentiles = {'big': {'p99': 300}, 'little': {'p99': 900}, 'overall': {'p99': 900}}
    report.cdf = {'big': [[100, 0.5], [300, 1.0]], 'little': [[900, 1.0]], 'overall': [[100, 0.25], [300, 0.75], [900, 1.0]]}
    for k, v in kw.items():
        setattr(report, k, v)
    return report


def test_report_checks_pass(tmp_path):
    results = ReportChecks(handReport(), baselineP99=500).run(str(tmp_path))
    assert set(results) == {'ThroughputAccounting', 'ClassThroughputSum', 'CdfShape', 'SloEnvelope',
                            'ViolationFraction', 'AffinitySkew'}
    assert all(v[0] == 1 for v in results.values())


def test_report_checks_catch_problems(tmp_path):
    report = handReport(recorded=5, violationFraction=0.5,
                        percentiles={'overall': {'p99': 5000}},
                        cdf={'overall': [[1, 0.5], [2, 0.9]]})
    report.throughput['overall'] = 5.0
    results = ReportChecks(report, baselineP99=500).run(str(tmp_path))
    for name in ('ThroughputAccounting', 'ClassThroughputSum', 'CdfShape', 'SloEnvelope', 'ViolationFraction'):
        assert results[name][0] == -1


def test_slo_envelope_covers_little_class(tmp_path):
    report = handReport(percentiles={'big': {'p99': 300}, 'little': {'p99': 2000}, 'overall': {'p99': 900}})
    results = ReportChecks(report, baselineP99=500).run(str(tmp_path))
    assert results['SloEnvelope'][0] == -1
    assert 'little P99 2000' in results['SloEnvelope'][1]


def test_slo_checks_skip_unachievable_slo(tmp_path):
    checks = ReportChecks(handReport(), baselineP99=1000)
    assert not checks.sloAchievable()
    results = checks.run(str(tmp_path))
    assert 'SloEnvelope' not in results and 'ViolationFraction' not in results


def test_check_rules_and_failures(tmp_path):
    Config.set('ReportChecks::rules', ['cdfshape'])
    assert list(ReportChecks(handReport()).run(str(tmp_path))) == ['CdfShape']

    class Broken(ReportChecks):
        def _checkBoom(self):
            raise RuntimeError('boom')

    checks = Broken(handReport())
    checks.run(str(tmp_path))
    assert checks.getInfo()['exceptions'] == 1
    assert 'boom' in (tmp_path / _C.ERROR_FILENAME).read_text()


def test_json_export_round_trip(tmp_path):
    report = handReport(points=[{'sloNs': 1000, 'p99': 900}])
    path = str(tmp_path / 'r.json')
    Reporter().exportReport(report, 'json', path)
    with open(path) as f:
        assert json.load(f) == report.toDict()


def test_csv_export(tmp_path):
    path = str(tmp_path / 'r.csv')
    Reporter().exportReport(handReport(), 'csv', path)
    with open(path) as f:
        rows = list(csv.reader(f))
    assert rows[0] == ['metric', 'class', 'value', 'latency_ns', 'cumulative_fraction']
    for cls in ('big', 'little', 'overall'):
        cdf = [r for r in rows if r[0] == 'cdf' and r[1] == cls]
        assert float(cdf[-1][4]) == 1.0
    assert ['throughput', 'overall', '4.0', '', ''] in rows


def test_sweep_csv_has_one_row_per_point(tmp_path):
    points = [{'sloNs': s, 'throughput': s / 10, 'p99': s - 1} for s in (1000, 2000, 4000)]
    path = str(tmp_path / 'sweep.csv')
    Reporter().exportReport(handReport(points=points), 'csv', path)
    with open(path) as f:
        rows = list(csv.reader(f))
    assert rows[0] == ['sloNs', 'throughput', 'p99']
    assert [int(r[0]) for r in rows[1:]] == [1000, 2000, 4000]


def test_xlsx_export(tmp_path):
    report = handReport(points=[{'sloNs': 1000, 'p99': None}])
    report.checks = {'CdfShape': [1, 'ok'], 'SloEnvelope': [-1, 'P99 5000 vs limit 1150']}
    path = str(tmp_path / 'r.xlsx')
    Reporter().exportReport(report, 'xlsx', path)

    wb = openpyxl.load_workbook(path)
    assert wb.sheetnames == ['Info', 'Summary', 'CDF', 'Points', 'Checks']
    summary = list(wb['Summary'].values)
    assert summary[0][0] == 'Class'
    assert [row[0] for row in summary[1:]] == ['big', 'little', 'overall']
    checks = list(wb['Checks'].values)
    assert checks[2][:3] == ('SloEnvelope', 'P99 within SLO tolerance', 'FAIL')


def test_export_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        Reporter().exportReport(handReport(), 'yaml', str(tmp_path / 'r.yaml'))
    with pytest.raises(ConfigurationError):
        Reporter(str(tmp_path / 'missing.json'))
    with pytest.raises(ConfigurationError):
        Reporter.exportData([], 'xlsx', str(tmp_path / 'm.xlsx'))


def test_export_data_csv(tmp_path):
    path = str(tmp_path / 'model.csv')
    Reporter.exportData([{'x': 0, 'y': 1.5}, {'x': 1, 'y': 2.5, 'extra': [1, 2]}], 'csv', path)
    with open(path) as f:
        rows = list(csv.reader(f))
    assert rows == [['x', 'y', 'extra'], ['0', '1.5', ''], ['1', '2.5', '[1, 2]']]


def test_variable_load_phases(quickProfile):
    cfg = BenchConfig(scenario='variable', lock='asl', durationS=1.0)
    scenario = VariableLoad(cfg, quickProfile)
    bounds = scenario.phaseBounds()
    assert [b[0] for b in bounds] == ['x1', 'x128', 'x1-back', 'random', 'x1024']
    assert bounds[0][2] == 0 and bounds[-1][3] == 10 ** 9
    assert scenario.phaseAt(0)[0] == 'x1'
    assert scenario.phaseAt(250 * 1000 * 1000)[0] == 'x128'
    assert scenario.phaseAt(2 * 10 ** 9)[0] == 'x1024'
    worker = Worker(0, CoreClass.LITTLE, 0)
    assert scenario.lengthOf(worker, 900 * 1000 * 1000) == 1024 * cfg.csNs
    assert scenario.lengthOf(worker, 700 * 1000 * 1000) // cfg.csNs in _C.RANDOM_PHASE_MULTIPLIERS


def test_slo_sweep_points(quickProfile):
    sweep = SloSweep(BenchConfig(scenario='slo', sweepValues=[9000, 3000]), quickProfile)
    assert sweep.sweepSlos(1000) == [3000, 9000]
    sweep = SloSweep(BenchConfig(scenario='slo'), quickProfile)
    assert sweep.sweepSlos(1000) == [500, 1000, 1500, 2000, 4000]


def shortConfig(**kw):
    base = dict(scenario='fixed', lock='mcs', nBig=2, nLittle=2, durationS=0.3, csNs=2000)
    base.update(kw)
    return BenchConfig(**base)


def test_workload_counts_every_epoch(quickProfile):
    cfg = shortConfig()
    result = Workload(cfg, FifoQueueLock(), quickProfile).run()
    assert isinstance(result, WorkloadResult)
    assert result.errors == []
    assert result.completed == sum(len(w.recorder) for w in result.workers)
    assert len(result.ofClass(CoreClass.LITTLE)) == 2
    assert result.elapsedNs >= 0.3 * 10 ** 9


def test_workload_captures_worker_failure(quickProfile):
    def body(worker, lengthNs):
        if worker.tid == 1:
            raise RuntimeError('worker down')

    result = Workload(shortConfig(), FifoQueueLock(), quickProfile, body=body).run()
    assert len(result.errors) == 1
    assert 'worker down' in result.errors[0]


@pytest.mark.parametrize('lock', ['mcs', 'tas', 'ticket', 'proportional', 'mutex'])
def test_fixed_bench_report(lock, quickProfile, tmp_path):
    report = Harness.runScenario(shortConfig(lock=lock), quickProfile, str(tmp_path))
    assert report.errors == 0
    assert report.completed > 0
    assert report.throughput['overall'] == pytest.approx(report.throughput['big'] + report.throughput['little'])
    assert report.checks['ThroughputAccounting'][0] == 1
    assert report.checks['CdfShape'][0] == 1
    assert report.cdf['overall'][-1][1] == 1.0


def test_bench_without_little_threads(quickProfile, tmp_path):
    report = Harness.runScenario(shortConfig(nLittle=0), quickProfile, str(tmp_path))
    assert report.throughput['little'] == 0.0
    assert report.percentiles['little'] == {}
    assert report.cdf['little'] == []
    assert report.acquisitions['little'] == 0


def test_asl_bench_with_slo_runs_fifo_baseline(quickProfile, tmp_path):
    Config.set('maxWindowNs', 1000 * 1000)
    report = Harness.runScenario(shortConfig(lock='asl', sloNs=10 ** 6, durationS=0.3), quickProfile, str(tmp_path))
    assert report.errors == 0
    assert 'mcs' in report.baselines
    assert report.violationFraction is not None
    assert report.sloNs == 10 ** 6


def test_nested_locks_count_acquisitions(quickProfile, tmp_path):
    report = Harness.runScenario(shortConfig(nested=2), quickProfile, str(tmp_path))
    assert report.acquisitions['big'] == 2 * sum(report.perThreadCounts[:2])


def test_data_structure_scenario(quickProfile, tmp_path):
    Config.set('maxWindowNs', 1000 * 1000)
    cfg = shortConfig(scenario='ds', lock='asl', structure='both', durationS=0.2)
    report = Harness.runScenario(cfg, quickProfile, str(tmp_path))
    assert report.checks['Conservation'][0] == 1
    assert {(p['structure'], p['lock']) for p in report.points} == {('stack', 'asl'), ('stack', 'mcs'), ('list', 'asl'), ('list', 'mcs')}
    assert all(p['conserved'] for p in report.points)


def test_run_scenario_needs_profile(tmp_path):
    with pytest.raises(CalibrationError):
        Harness.runScenario(shortConfig(), None, str(tmp_path))


def test_mixed_lengths_scenario(quickProfile, tmp_path):
    Config.set('maxWindowNs', 1000 * 1000)
    cfg = shortConfig(scenario='mixed', lock='asl', mix='1:0.5,100:0.5', csNs=1000, durationS=0.3)
    report = Harness.runScenario(cfg, quickProfile, str(tmp_path))
    assert report.errors == 0
    assert report.lock == 'asl'
    assert report.baselines['mcs']['lock'] == 'mcs'
    ## no SLO given: derived from the FIFO run
    assert report.sloNs is not None and report.sloNs > 0
    assert report.baselines['speedupVsMcs'] > 0
    assert report.checks['ThroughputAccounting'][0] == 1


def test_contention_sweep_points(quickProfile, tmp_path):
    Config.set('maxWindowNs', 1000 * 1000)
    cfg = shortConfig(scenario='noncs', lock='asl', sweepValues=[4000, 0], durationS=0.2)
    report = Harness.runScenario(cfg, quickProfile, str(tmp_path))
    assert report.errors == 0
    assert [p['nonCsNs'] for p in report.points] == [0, 4000]
    for p in report.points:
        for name in ('asl', 'mcs', 'tas', 'mcsBigOnly'):
            assert p[name] > 0
        assert p['speedupVsMcs'] == pytest.approx(p['asl'] / p['mcs'])
        assert p['tasBigAcquisitions'] + p['tasLittleAcquisitions'] > 0


def test_contention_sweep_default_points(quickProfile):
    sweep = ContentionSweep(BenchConfig(scenario='noncs', csNs=1000), quickProfile)
    assert sweep.sweepNonCs() == [0, 1000, 4000, 16000, 64000]


def test_oversubscription_scenario(quickProfile, tmp_path):
    Config.set('maxWindowNs', 1000 * 1000)
    cfg = shortConfig(scenario='oversub', lock='asl', nBig=1, nLittle=1, oversubscription=1, durationS=0.2)
    report = Harness.runScenario(cfg, quickProfile, str(tmp_path))
    assert report.errors == 0
    ## factor is raised to at least 2
    assert len(report.perThreadCounts) == 4
    assert [p['configuration'] for p in report.points] == ['mutex', 'asl sleep-standby + mutex', 'asl spin-standby + mcs']
    assert report.baselines['mutex']['lock'] == 'mutex'
    assert report.checks['ThroughputAccounting'][0] == 1


def test_scenario_lookup():
    assert Harness.getScenarioClassDynamically('slo') is SloSweep
    assert Harness.getLockClassDynamically('mcs') is FifoQueueLock
    with pytest.raises(ConfigurationError):
        Harness.getScenarioClassDynamically('nope')
    with pytest.raises(ConfigurationError):
        Harness.getLockClassDynamically('nope')
    assert Harness.scenarioFor('bench', {'scenario': 'mixed'}) == 'mixed'
    assert Harness.scenarioFor('sweep', {'sweep': 'noncs'}) == 'noncs'
    assert Harness.scenarioFor('oversub', {}) == 'oversub'


def test_model_rows_follow_formula():
    rows = Harness.runModel({'xmax': 8, 'emulate_a': 4.7})
    assert [r['x'] for r in rows] == list(range(9))
    for r in rows:
        assert r['simulatedThroughput'] == pytest.approx(r['theoreticalThroughput'], abs=1e-9)


def test_generate_output_reports_worker_errors(tmp_path):
    report = handReport(errors=2)
    with pytest.raises(WorkerError):
        Harness.generateOutput(report, 'json', str(tmp_path / 'r.json'))
    assert os.path.exists(str(tmp_path / 'r.json'))
