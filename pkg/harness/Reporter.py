import csv
import json
import os

import constants as _C
from utils.Errors import ConfigurationError, ExportError
from utils.Tools import _info

FORMATS = ['json', 'csv', 'xlsx']
CSV_HEADER = ['metric', 'class', 'value', 'latency_ns', 'cumulative_fraction']


class Reporter:
    def __init__(self, confPath = None):
        confPath = _C.CHECKS_CONF_PATH if confPath is None else confPath
        if not os.path.exists(confPath):
            print("[Fatal] " + confPath + " not found")
            raise ConfigurationError(confPath + " not found")
        with open(confPath) as f:
            self.config = json.loads(f.read())
        if not self.config:
            raise ConfigurationError(confPath + " does not contain valid JSON")

    def describeChecks(self, results):
        """[[check, shortDesc, status, detail]] in the order checks ran."""
        rows = []
        for name, (status, detail) in results.items():
            desc = self.config.get(name, {}).get('shortDesc', name)
            rows.append([name, desc, 'PASS' if status == 1 else 'FAIL', detail])
        return rows

    @staticmethod
    def csvRows(report):
        ## one row per (metric, class); CDF rows carry latency/fraction pairs
        rows = []
        for cls, v in report.throughput.items():
            rows.append(['throughput', cls, v, '', ''])
        for cls, pcts in report.percentiles.items():
            for key, v in pcts.items():
                rows.append([key, cls, v, '', ''])
        for cls, v in report.acquisitions.items():
            rows.append(['acquisitions', cls, v, '', ''])
        if report.violationFraction is not None:
            rows.append(['violation_fraction', _C.CLASS_OVERALL, report.violationFraction, '', ''])
        rows.append(['fairness', _C.CLASS_OVERALL, report.fairness, '', ''])
        for cls, cdf in report.cdf.items():
            for latency, fraction in cdf:
                rows.append(['cdf', cls, '', latency, fraction])
        return rows

    @staticmethod
    def pointColumns(points):
        cols = []
        for p in points:
            for k in p.keys():
                if k not in cols:
                    cols.append(k)
        return cols

    def exportReport(self, report, fmt, path):
        if fmt not in FORMATS:
            raise ConfigurationError("unknown format '{}', expected one of {}".format(fmt, FORMATS))
        folder = os.path.dirname(os.path.abspath(path))
        try:
            os.makedirs(folder, exist_ok=True)
            if fmt == 'json':
                with open(path, 'w') as f:
                    json.dump(report.toDict(), f, indent=2)
            elif fmt == 'csv':
                self._writeCsv(report, path)
            else:
                from utils.ExcelBuilder import ExcelBuilder
                eb = ExcelBuilder(path, report)
                eb.build(self.describeChecks(report.checks))
        except OSError as e:
            raise ExportError("cannot write {}: {}".format(path, e))

        _info("report written to {}".format(path), alwaysPrint=True)
        return path

    def _writeCsv(self, report, path):
        with open(path, 'w', newline='') as f:
            w = csv.writer(f)
            if report.points:
                ## sweeps: one row per point
                cols = Reporter.pointColumns(report.points)
                w.writerow(cols)
                for p in report.points:
                    w.writerow([p.get(c, '') for c in cols])
                return
            w.writerow(CSV_HEADER)
            w.writerows(Reporter.csvRows(report))

    @staticmethod
    def exportData(data, fmt, path):
        ## model/simulate output: a flat dict or a list of flat dicts
        folder = os.path.dirname(os.path.abspath(path))
        os.makedirs(folder, exist_ok=True)
        if fmt == 'json':
            with open(path, 'w') as f:
                json.dump(data, f, indent=2)
        elif fmt == 'csv':
            rows = data if isinstance(data, list) else [data]
            cols = Reporter.pointColumns(rows)
            with open(path, 'w', newline='') as f:
                w = csv.writer(f)
                w.writerow(cols)
                for r in rows:
                    w.writerow([r.get(c, '') if not isinstance(r.get(c), (list, dict)) else json.dumps(r.get(c)) for c in cols])
        else:
            raise ConfigurationError("model output supports json|csv, got '{}'".format(fmt))
        _info("output written to {}".format(path), alwaysPrint=True)
        return path
