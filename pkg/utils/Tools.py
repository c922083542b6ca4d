import locale

from utils.Config import Config


def _pr(s, forcePrint = False):
    DEBUG = Config.get('DEBUG')
    if forcePrint or DEBUG == True:
        print(s)

def _info(s, alwaysPrint = False):
    _printStatus("info", s, alwaysPrint)

def _warn(s, forcePrint=True):
    _printStatus("\033[1;41m__!! WARNING !!__\033[0m", s, forcePrint)

def _printStatus(status, s, forcePrint = False):
    p = "["+status+"] "+ s
    _pr(p, forcePrint)

def number_format(num, places=2):
    return locale.format_string("%.*f", (places, num), True)

def ns_format(ns):
    if ns is None:
        return '-'
    if ns >= 1000 * 1000:
        return "{}ms".format(number_format(ns / 1e6, 3))
    if ns >= 1000:
        return "{}us".format(number_format(ns / 1e3, 2))
    return "{}ns".format(int(ns))

def parseIntList(value):
    ## "1000,2000,5000" -> [1000, 2000, 5000]
    if value is None or value == '':
        return []
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    return [int(float(v)) for v in str(value).split(',') if v.strip() != '']

def jainsFairness(values):
    values = [v for v in values]
    if not values or sum(values) == 0:
        return 1.0
    return (sum(values) ** 2) / (len(values) * sum(x ** 2 for x in values))


if __name__ == "__main__":
    Config.init()
    Config.set('DEBUG', True)
    _info(ns_format(1500))
    _info(ns_format(2500000))
    _warn(str(jainsFairness([1, 1, 1, 5])))
