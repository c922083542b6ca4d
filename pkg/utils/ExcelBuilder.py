import json
from datetime import datetime

import xlsxwriter

from utils.Config import Config

class ExcelBuilder:
    XLSX_CREATOR = "AmpLock benchmark harness"
    XLSX_TITLE = "AmpLock Benchmark Report"
    SUMMARY_HEADER = [[
        'Class',
        'Throughput (epochs/s)',
        'Acquisitions',
        'P50 (ns)',
        'P90 (ns)',
        'P99 (ns)',
        'P99.9 (ns)'
    ]]
    CHECKS_HEADER = [['Check', 'Description', 'Status', 'Detail']]

    def __init__(self, filename, report):
        self.XLSX_FILENAME = filename
        self.report = report
        self.obj = xlsxwriter.Workbook(self.XLSX_FILENAME)

        self.xlsxFormat = {}
        self._setExcelInfo()
        self.buildListOfXlsxFormat()

        self.InfoSheet = self.obj.add_worksheet('Info')
        self.sheetIndex = 1

    def buildListOfXlsxFormat(self):
        self.xlsxFormat['bold'] = self.obj.add_format({'bold': True})
        self.xlsxFormat['wrapText'] = self.obj.add_format().set_text_wrap()
        self.xlsxFormat['border'] = self.obj.add_format({'border': 1})
        self.xlsxFormat['fail'] = self.obj.add_format({'font_color': '#9C0006', 'bg_color': '#FFC7CE'})

    def writeRowsInArray(self, sh, data, startRow, startCol, cFormat=None):
        for _r, _d in enumerate(data):
            sh.write_row(startRow+_r, startCol, _d, cFormat)

    def build(self, checkRows = None):
        self.buildInfoPage()
        self.buildSummarySheet()
        self.buildCdfSheet()
        if self.report.points:
            self.buildPointsSheet()
        if checkRows:
            self.buildChecksSheet(checkRows)
        self._save()
        return self.XLSX_FILENAME

    def buildInfoPage(self):
        sh = self.InfoSheet
        r = self.report

        info = [
            ['Scenario', r.scenario],
            ['Lock', r.lock],
            ['Generated on', datetime.today().strftime('%Y/%m/%d %H:%M:%S')],
            ['Elapsed (s)', r.elapsedS],
            ['Completed epochs', r.completed],
            ['SLO (ns)', r.sloNs if r.sloNs is not None else 'max'],
            ['Violation fraction', r.violationFraction if r.violationFraction is not None else '-'],
            ['Fairness (Jain)', r.fairness],
            ['Worker errors', r.errors]
        ]

        info.append(['...Parameters', '...................'])
        for key, val in r.config.items():
            info.append([key, val if not isinstance(val, (list, dict)) else json.dumps(val)])

        info.append(['...Topology', '...................'])
        for key, val in r.topology.items():
            info.append([key, val])

        info.append(['...Calibration', '...................'])
        for key, val in r.calibration.items():
            info.append([key, val])

        info.append(['...Product Info', '...................'])
        for key, val in Config.ADVISOR.items():
            info.append([key, val])

        self.writeRowsInArray(sh, info, 0, 0)
        self._setAutoSize(sh)

    def buildSummarySheet(self):
        sh = self.obj.add_worksheet('Summary')
        r = self.report
        data = []
        for cls, tput in r.throughput.items():
            pcts = r.percentiles.get(cls, {})
            data.append([
                cls,
                tput,
                r.acquisitions.get(cls, sum(r.acquisitions.values())),
                pcts.get('p50', ''),
                pcts.get('p90', ''),
                pcts.get('p99', ''),
                pcts.get('p99.9', '')
            ])

        self.writeRowsInArray(sh, self.SUMMARY_HEADER, 0, 0)
        self.writeRowsInArray(sh, data, 1, 0, self.xlsxFormat['border'])
        sh.set_row(0, None, self.xlsxFormat['bold'])
        self._setAutoSize(sh)
        self.sheetIndex += 1

    def buildCdfSheet(self):
        ## one (latency, fraction) column pair per class
        sh = self.obj.add_worksheet('CDF')
        col = 0
        for cls, rows in self.report.cdf.items():
            self.writeRowsInArray(sh, [[cls + ' latency_ns', cls + ' cumulative_fraction']], 0, col)
            self.writeRowsInArray(sh, rows, 1, col)
            col += 2
        sh.set_row(0, None, self.xlsxFormat['bold'])
        self._setAutoSize(sh)
        self.sheetIndex += 1

    def buildPointsSheet(self):
        sh = self.obj.add_worksheet('Points')
        points = self.report.points
        cols = []
        for p in points:
            for k in p.keys():
                if k not in cols:
                    cols.append(k)
        data = [[self._cell(p.get(c)) for c in cols] for p in points]
        self.writeRowsInArray(sh, [cols], 0, 0)
        self.writeRowsInArray(sh, data, 1, 0)
        sh.set_row(0, None, self.xlsxFormat['bold'])
        self._setAutoSize(sh)
        self.sheetIndex += 1

    def buildChecksSheet(self, checkRows):
        sh = self.obj.add_worksheet('Checks')
        self.writeRowsInArray(sh, self.CHECKS_HEADER, 0, 0)
        for _r, row in enumerate(checkRows):
            fmt = self.xlsxFormat['fail'] if row[2] == 'FAIL' else None
            sh.write_row(_r + 1, 0, row, fmt)
        sh.set_row(0, None, self.xlsxFormat['bold'])
        sh.set_column("D:D", None, self.xlsxFormat['wrapText'])
        self._setAutoSize(sh)
        self.sheetIndex += 1

    def _cell(self, val):
        if val is None:
            return ''
        if isinstance(val, (list, dict)):
            return json.dumps(val)
        return val

    def _setExcelInfo(self):
        self.obj.set_properties({
            'title': self.XLSX_TITLE,
            'subject': self.XLSX_TITLE,
            'comments': self._getXLSXDescription(),
            'author': self.XLSX_CREATOR,
            'keywords': 'AmpLock, locks, benchmark, SLO',
            'created': datetime.now()
        })

    def _setAutoSize(self, sh):
        sh.autofit()

    def _getXLSXDescription(self):
        now = datetime.now()
        return now.strftime('%Y/%m/%d %H:%M:%S') + " | " + self.report.scenario + "::" + self.report.lock

    def _save(self):
        self.obj.close()
