import argparse

class ArguParser:
    COMMANDS = ['bench', 'sweep', 'ds', 'oversub', 'model', 'simulate']

    ## flag => argparse options; 'short' is only set where it cannot collide
    CLI_ARGUMENT_RULES = {
        "scenario": {
            "required": False,
            "default": "fixed",
            "choices": ['fixed', 'variable', 'mixed'],
            "help": "bench only: --scenario fixed|variable|mixed"
        },
        "sweep": {
            "required": False,
            "default": "slo",
            "choices": ['slo', 'noncs'],
            "help": "sweep only: --sweep slo|noncs"
        },
        "lock": {
            "short": "l",
            "required": False,
            "default": "asl",
            "help": "--lock mcs|tas|ticket|proportional|mutex|asl"
        },
        "big": {
            "short": "b",
            "required": False,
            "default": None,
            "type": int,
            "help": "number of big-class threads"
        },
        "little": {
            "required": False,
            "default": None,
            "type": int,
            "help": "number of little-class threads"
        },
        "slo-ns": {
            "required": False,
            "default": None,
            "help": "--slo-ns 70000, or max for no SLO"
        },
        "pct": {
            "required": False,
            "default": None,
            "type": int,
            "help": "percentile the SLO applies to, 1..99"
        },
        "duration-s": {
            "short": "d",
            "required": False,
            "default": None,
            "type": float,
            "help": "run length per lock, seconds"
        },
        "cs-ns": {
            "required": False,
            "default": None,
            "type": int,
            "help": "base critical section length on a big core (simulate: ticks)"
        },
        "noncs-ns": {
            "required": False,
            "default": None,
            "type": int,
            "help": "work between epochs (simulate: ticks)"
        },
        "mix": {
            "required": False,
            "default": None,
            "help": "epoch length mix, --mix 1:0.5,100:0.5"
        },
        "values": {
            "required": False,
            "default": None,
            "help": "sweep points, --values 10000,20000,40000"
        },
        "nested": {
            "required": False,
            "default": None,
            "type": int,
            "help": "locks taken per epoch"
        },
        "oversub": {
            "required": False,
            "default": None,
            "type": int,
            "help": "threads per emulated core"
        },
        "structure": {
            "required": False,
            "default": None,
            "choices": ['stack', 'list', 'both'],
            "help": "ds only: --structure stack|list|both"
        },
        "standby": {
            "required": False,
            "default": None,
            "choices": ['spin', 'sleep'],
            "help": "asl lock: how standby competitors wait, --standby spin|sleep"
        },
        "inner": {
            "required": False,
            "default": None,
            "choices": ['mcs', 'ticket', 'tas', 'proportional', 'mutex'],
            "help": "asl lock: the lock underneath the reorder window"
        },
        "seed": {
            "short": "s",
            "required": False,
            "default": None,
            "type": int
        },
        "emulate-a": {
            "short": "a",
            "required": False,
            "default": None,
            "type": float,
            "help": "little/big critical section cost ratio"
        },
        "pin": {
            "required": False,
            "default": None,
            "action": argparse.BooleanOptionalAction,
            "help": "--pin/--no-pin worker threads to cores"
        },
        "policy": {
            "required": False,
            "default": "fifo",
            "help": "simulate only: fifo|tas_affinity(big)|proportional(10)|window(5000)|slo_feedback(20000,99)"
        },
        "horizon": {
            "required": False,
            "default": None,
            "type": int,
            "help": "simulate: critical sections (epochs for step/trace models)"
        },
        "latency-model": {
            "required": False,
            "default": "measured",
            "choices": ['measured', 'step', 'trace'],
            "help": "simulate, slo_feedback only"
        },
        "step": {
            "required": False,
            "default": None,
            "help": "step model: --step threshold,below,above (ticks)"
        },
        "xmax": {
            "required": False,
            "default": 32,
            "type": int,
            "help": "model: largest big-per-little batch"
        },
        "format": {
            "short": "f",
            "required": False,
            "default": "json",
            "choices": ['json', 'csv', 'xlsx'],
            "help": "--format json|csv|xlsx"
        },
        "out": {
            "short": "o",
            "required": False,
            "default": None,
            "help": "output file, defaults to __output/<scenario>-<lock>.<format>"
        },
        "config": {
            "short": "c",
            "required": False,
            "default": None,
            "help": "JSON key-value config file"
        },
        "debug": {
            "required": False,
            "default": False,
            "help": "--debug True|False"
        }
    }

    @staticmethod
    def buildParser():
        parser = argparse.ArgumentParser(prog='AmpLock', description='AmpLock, SLO-bounded lock reordering benchmarks and lock-ordering model for big/little cores')
        parser.add_argument('command', choices=ArguParser.COMMANDS)

        for k, v in ArguParser.CLI_ARGUMENT_RULES.items():
            flags = ['--' + k]
            if 'short' in v:
                flags.insert(0, '-' + v['short'])
            kwargs = {'required': v['required'], 'default': v['default'], 'help': v.get('help', None)}
            for opt in ('type', 'choices', 'action'):
                if opt in v:
                    kwargs[opt] = v[opt]
            parser.add_argument(*flags, **kwargs)
        return parser

    @staticmethod
    def Load(argv = None):
        args = vars(ArguParser.buildParser().parse_args(argv))
        return args

if __name__ == "__main__":
    print(ArguParser.Load(['bench', '--lock', 'mcs', '--no-pin']))
