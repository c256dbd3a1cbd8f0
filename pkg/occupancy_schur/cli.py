# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line front end for occupancy-schur.

    occupancy-schur expectation --p 0.7,0.3 --balls 3
    occupancy-schur dist --p 0.7,0.3 --balls 2 --method mc --trials 100000
    occupancy-schur compare --a 1,0,0 --b 1/3,1/3,1/3
    occupancy-schur dominance --p 0.7,0.3 --q 0.5,0.5 --balls 2
    occupancy-schur schur-check --field occupancy-phi --n 5 --balls 7 --samples 1000
    occupancy-schur verify conjecture --n 5 --balls 20 --iters 500 --seed 42

Reports go to standard output (or ``--out``); verification commands also
print a one-line PASS/FAIL summary to standard error. Exit status is 0 on
success, 1 on a usage error, 2 on a failed verification and 3 when an exact
backend is over budget.
"""

import fractions
import logging
import logging.handlers
import os
import platform
import sys

import numpy as np
import scipy

from occupancy_schur import config, constants, errors, util
from occupancy_schur.constants import __version__
from occupancy_schur.formatters import ScalarReport, get_formatter
from occupancy_schur.majorization import compare
from occupancy_schur.occupancy import (
    EXACT_METHODS,
    distribution,
    expectation_closed_form,
    simulate,
    variance_closed_form,
)
from occupancy_schur.prob import ExperimentConfig, ProbVector
from occupancy_schur.schur import FIELDS, PASS, NOT_APPLICABLE, dominance_check, schur_check
from occupancy_schur.verification import (
    TARGETS,
    verify_conjecture,
    verify_dominance,
    verify_identities,
    verify_monotonicity_sweep,
)


LOG = logging.getLogger(__name__)

COMMON_FLAGS = {"config_file", "verbose", "logfile", "log_format", "format", "out", "tolerance"}

COMMAND_FLAGS = {
    "expectation": {"p", "balls"},
    "dist": {"p", "balls", "method", "trials", "seed", "shard_size", "workers"},
    "compare": {"a", "b"},
    "dominance": {"p", "q", "balls", "method"},
    "schur-check": {"field", "n", "balls", "samples", "seed"},
    "verify": {"n", "balls", "pairs", "iters", "trials", "samples", "starts", "seed", "method"},
}

VERIFICATION_COMMANDS = ("dominance", "schur-check", "verify")


def parse_vector(text, flag):
    """Parse comma-separated decimals or fractions such as ``1/3``."""
    try:
        return [float(fractions.Fraction(token.strip())) for token in text.split(",")]
    except (ValueError, ZeroDivisionError, OverflowError):
        raise errors.InvalidConfiguration(
            "%s: cannot parse %r as comma-separated numbers" % (flag, text)
        )


def get_config_options():
    result = []

    def add_option(*args, **kwargs):
        opt = config.Option(*args, **kwargs)
        result.append(opt)
        return opt

    def vector_option(name, help):
        def apply_vector(option, cli_values):
            if cli_values[name] is not None:
                option.value = parse_vector(cli_values[name], "--" + name)

        vector = add_option(config_key=name, type=list, apply_function=apply_vector)
        vector.add_cli("--" + name, dest=name, metavar="VEC", help=help)
        return vector

    vector_option("p", "Box probabilities, e.g. 0.7,0.3 or 1/3,1/3,1/3.")
    vector_option("q", "Second probability vector for dominance; should be majorized by --p.")
    vector_option("a", "First vector for compare.")
    vector_option("b", "Second vector for compare.")

    balls = add_option(config_key="balls", type=int)
    balls.add_cli("--balls", "-N", type="int", dest="balls", help="Number of balls N.")

    boxes = add_option(config_key="n", type=int)
    boxes.add_cli("--n", type="int", dest="n", help="Number of boxes n.")

    method = add_option(config_key="method", type=str)
    method.add_cli(
        "--method",
        dest="method",
        help="dist: one of dp, ie, brute, mc (default dp). "
        "dominance and verify dominance: dp or ie.",
    )

    field = add_option(config_key="field", default="occupancy-phi", type=str)
    field.add_cli(
        "--field",
        dest="field",
        help="Scalar field for schur-check: %s." % ", ".join(sorted(FIELDS)),
    )

    for name, help in (
        ("trials", "Monte Carlo trials, or random-search samples for verify conjecture."),
        ("pairs", "Generated pairs (or random vectors for verify identities)."),
        ("samples", "Interior points tested by the Schur condition."),
        ("iters", "Projected-gradient iterations per start."),
        ("starts", "Random starts for verify conjecture."),
    ):
        counted = add_option(config_key=name, type=int)
        counted.add_cli("--" + name, type="int", dest=name, help=help)

    seed = add_option(config_key="seed", default=constants.DEFAULT_SEED, type=int)
    seed.add_cli("--seed", type="int", dest="seed", help="Seed of every random stream (default 0).")

    tolerance = add_option(config_key="tolerance", default=constants.DEFAULT_TOLERANCE, type=float)
    tolerance.add_cli(
        "--tolerance", type="float", dest="tolerance", help="Verification tolerance (default 1e-9)."
    )

    output_format = add_option(config_key="format", default=constants.DEFAULT_FORMAT, type=str)
    output_format.add_cli(
        "--format",
        dest="format",
        type="choice",
        choices=["table", "json", "csv"],
        help="Output format (default table).",
    )

    out = add_option(config_key="out", type=str)
    out.add_cli("--out", dest="out", help="Write the report to this file instead of stdout.")

    def apply_monte_carlo(option, cli_values):
        if cli_values["shard_size"] is not None:
            option.value["shardSize"] = cli_values["shard_size"]
        if cli_values["workers"] is not None:
            option.value["workers"] = cli_values["workers"]

    monte_carlo = add_option(
        config_key="monteCarlo",
        default={
            "shardSize": constants.DEFAULT_SHARD_SIZE,
            "workers": constants.DEFAULT_WORKERS,
        },
        type=dict,
        apply_function=apply_monte_carlo,
    )
    monte_carlo.add_cli(
        "--shard-size", type="int", dest="shard_size", help="Trials per seeded substream."
    )
    monte_carlo.add_cli("--workers", type="int", dest="workers", help="Monte Carlo threads.")

    budget = add_option(
        config_key="budget",
        default={
            "dpMaxBoxes": constants.DEFAULT_DP_MAX_BOXES,
            "dpMaxBalls": constants.DEFAULT_DP_MAX_BALLS,
            "ieMaxBoxes": constants.DEFAULT_IE_MAX_BOXES,
            "bruteMaxSequences": constants.DEFAULT_BRUTE_MAX_SEQUENCES,
        },
        type=dict,
    )

    def apply_verbosity(option, cli_values):
        if cli_values["verbose"]:
            option.value = 3
        if option.value < 0 or option.value > 3:
            raise errors.InvalidConfiguration("verbosity must be in the range [0, 3].")

    # Default is warnings and above.
    verbosity = add_option(
        config_key="verbosity", default=1, type=int, apply_function=apply_verbosity
    )
    verbosity.add_cli(
        "-v", "--verbose", action="store_true", dest="verbose", help="Enables verbose logging."
    )

    def apply_logging(option, cli_values):
        if cli_values["log_format"]:
            option.value["format"] = cli_values["log_format"]
        if cli_values["logfile"]:
            option.value["type"] = "file"
            option.value["filename"] = cli_values["logfile"]
        if option.value.get("filename"):
            # Expand the full path to log file
            option.value["filename"] = os.path.abspath(option.value["filename"])

    default_logging = {
        "type": "stream",
        "filename": None,
        "format": constants.DEFAULT_LOG_FORMAT,
        "rotationInterval": constants.DEFAULT_LOGFILE_INTERVAL,
        "rotationBackups": constants.DEFAULT_LOGFILE_BACKUPCOUNT,
        "rotationWhen": constants.DEFAULT_LOGFILE_WHEN,
    }
    logging_option = add_option(
        config_key="logging", default=default_logging, type=dict, apply_function=apply_logging
    )
    logging_option.add_cli(
        "-w", "--logfile", dest="logfile", help="Log to the specified file instead of stderr."
    )
    logging_option.add_cli(
        "--log-format",
        dest="log_format",
        help="Define a specific format for the logger. The format is based "
        "on the python logging lib.",
    )

    config_file = add_option()
    config_file.add_cli(
        "-c",
        "--config-file",
        dest="config_file",
        help="Specify a JSON file to load configurations from. An example "
        "ships as occupancy_schur/config.json",
    )

    return result


_HANDLER_MARK = "_occupancy_schur_handler"


def setup_logging(conf, stream=None):
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            root_logger.removeHandler(handler)
            handler.close()
    formatter = logging.Formatter(conf["logging.format"])

    log_levels = [logging.ERROR, logging.WARNING, logging.INFO, logging.DEBUG]
    loglevel = log_levels[conf["verbosity"]]
    root_logger.setLevel(loglevel)

    if conf["logging.type"] == "file":
        if not conf["logging.filename"]:
            raise errors.InvalidConfiguration("file logging needs logging.filename")
        log_out = logging.handlers.TimedRotatingFileHandler(
            conf["logging.filename"],
            when=conf["logging.rotationWhen"],
            interval=conf["logging.rotationInterval"],
            backupCount=conf["logging.rotationBackups"],
        )
    elif conf["logging.type"] == "stream":
        log_out = logging.StreamHandler(stream if stream is not None else sys.stderr)
    else:
        raise errors.InvalidConfiguration(
            "Logging type must be one of 'stream' or 'file', not '%s'." % conf["logging.type"]
        )

    setattr(log_out, _HANDLER_MARK, True)
    log_out.setLevel(loglevel)
    log_out.setFormatter(formatter)
    root_logger.addHandler(log_out)
    return root_logger


def log_startup_info():
    """Log info about the current environment."""
    LOG.info("Starting occupancy-schur version: %s", __version__)
    if "dev" in __version__:
        LOG.info("This is a development version (%s) of occupancy-schur", __version__)
    LOG.info("Python version: %s", sys.version)
    LOG.info("Platform: %s", platform.platform())
    LOG.info("numpy version: %s, scipy version: %s", np.__version__, scipy.__version__)


def _flag(dest):
    return "--" + dest.replace("_", "-")


def validate_command(conf):
    """Check the subcommand, the flags it accepts and every numeric range."""
    if not conf.command:
        raise errors.InvalidConfiguration(
            "missing command; choose one of %s" % ", ".join(sorted(COMMAND_FLAGS))
        )
    command = conf.command[0]
    if command not in COMMAND_FLAGS:
        raise errors.InvalidConfiguration("unknown command %r" % command)
    expected_args = 2 if command == "verify" else 1
    if len(conf.command) != expected_args:
        if command == "verify":
            raise errors.InvalidConfiguration(
                "verify needs exactly one target: %s" % ", ".join(TARGETS)
            )
        raise errors.InvalidConfiguration(
            "The following command line arguments are not recognized: "
            + ", ".join(conf.command[1:])
        )
    if command == "verify" and conf.command[1] not in TARGETS:
        raise errors.InvalidConfiguration(
            "unknown verify target %r; choose one of %s" % (conf.command[1], ", ".join(TARGETS))
        )
    allowed = COMMAND_FLAGS[command] | COMMON_FLAGS
    for dest in sorted(conf.given - allowed):
        raise errors.InvalidConfiguration("%s does not apply to %s" % (_flag(dest), command))
    if command == "dist" and "trials" in conf.given and (conf["method"] or "dp") != "mc":
        raise errors.InvalidConfiguration("--trials only applies to --method mc")

    for name, low in (
        ("balls", 0),
        ("n", 1),
        ("trials", 1),
        ("pairs", 1),
        ("samples", 1),
        ("iters", 1),
        ("starts", 1),
    ):
        value = conf[name]
        if value is not None and value < low:
            raise errors.InvalidConfiguration("%s must be at least %d, got %d" % (_flag(name), low, value))
    if not 0 <= conf["seed"] < 1 << 64:
        raise errors.InvalidConfiguration("--seed must be an unsigned 64-bit integer")
    if not conf["tolerance"] > 0:
        raise errors.InvalidConfiguration("--tolerance must be positive")
    if conf["monteCarlo.shardSize"] < 1:
        raise errors.InvalidConfiguration("--shard-size must be at least 1")
    if conf["monteCarlo.workers"] < 1:
        raise errors.InvalidConfiguration("--workers must be at least 1")
    return command


def _require(conf, name):
    value = conf[name]
    if value is None:
        raise errors.InvalidConfiguration("%s is required" % _flag(name))
    return value


def _vector(conf, name):
    value = _require(conf, name)
    try:
        return ProbVector(value)
    except errors.InvalidProbabilityVector as exc:
        raise errors.InvalidConfiguration("%s: %s" % (_flag(name), exc))


def _budget(conf, method):
    if method == "dp":
        return {"max_boxes": conf["budget.dpMaxBoxes"], "max_balls": conf["budget.dpMaxBalls"]}
    if method == "ie":
        return {"max_boxes": conf["budget.ieMaxBoxes"]}
    return {"max_sequences": conf["budget.bruteMaxSequences"]}


def _exact_method(conf, allowed):
    method = conf["method"] or "dp"
    if method not in allowed:
        raise errors.InvalidConfiguration(
            "--method must be one of %s, not %r" % (", ".join(allowed), method)
        )
    return method


def cmd_expectation(conf):
    p = _vector(conf, "p")
    balls = _require(conf, "balls")
    report = ScalarReport(
        expectation=expectation_closed_form(p, balls),
        variance=variance_closed_form(p, balls),
        n=p.n,
        balls=balls,
    )
    return report, constants.EXIT_OK


def cmd_dist(conf):
    p = _vector(conf, "p")
    balls = _require(conf, "balls")
    method = _exact_method(conf, EXACT_METHODS + ("mc",))
    if method == "mc":
        cfg = ExperimentConfig(
            balls,
            seed=conf["seed"],
            trials=conf["trials"] or constants.DEFAULT_TRIALS,
            tolerance=conf["tolerance"],
            shard_size=conf["monteCarlo.shardSize"],
            workers=conf["monteCarlo.workers"],
        )
        return simulate(p, cfg), constants.EXIT_OK
    return distribution(p, balls, method, **_budget(conf, method)), constants.EXIT_OK


def cmd_compare(conf):
    a = _vector(conf, "a")
    b = _vector(conf, "b")
    if "tolerance" in conf.given:
        verdict = compare(a, b, conf["tolerance"])
    else:
        verdict = compare(a, b)
    return verdict, constants.EXIT_OK


def cmd_dominance(conf):
    p = _vector(conf, "p")
    q = _vector(conf, "q")
    method = _exact_method(conf, ("dp", "ie"))
    report = dominance_check(
        p, q, _require(conf, "balls"), method, conf["tolerance"], **_budget(conf, method)
    )
    status = constants.EXIT_FAILED if report.status not in (PASS, NOT_APPLICABLE) else constants.EXIT_OK
    summary = "N/A" if report.status == NOT_APPLICABLE else None
    return report, status, summary


def cmd_schur_check(conf):
    field = conf["field"]
    if field not in FIELDS:
        raise errors.InvalidConfiguration(
            "--field must be one of %s, not %r" % (", ".join(sorted(FIELDS)), field)
        )
    f = FIELDS[field](_require(conf, "n"), _require(conf, "balls"))
    report = schur_check(
        f, conf["samples"] or constants.DEFAULT_SAMPLES, util.make_rng(conf["seed"])
    )
    return report, constants.EXIT_OK if report.passed else constants.EXIT_FAILED


def cmd_verify(conf):
    target = conf.command[1]
    n = _require(conf, "n")
    balls = _require(conf, "balls")
    seed = conf["seed"]
    if target != "dominance" and "method" in conf.given:
        raise errors.InvalidConfiguration("--method only applies to verify dominance")
    if target == "conjecture":
        report = verify_conjecture(
            n,
            balls,
            iters=conf["iters"] or constants.DEFAULT_ITERS,
            seed=seed,
            starts=conf["starts"] or constants.VERIFY_STARTS,
            samples=conf["trials"] or constants.DEFAULT_SEARCH_SAMPLES,
        )
    elif target == "monotonicity":
        report = verify_monotonicity_sweep(
            n,
            balls,
            pairs=conf["pairs"] or constants.DEFAULT_PAIRS,
            seed=seed,
            samples=conf["samples"] or constants.DEFAULT_SAMPLES,
            tolerance=conf["tolerance"],
        )
    elif target == "dominance":
        report = verify_dominance(
            n,
            balls,
            pairs=conf["pairs"] or constants.DEFAULT_PAIRS,
            seed=seed,
            method=_exact_method(conf, ("dp", "ie")),
            tolerance=conf["tolerance"],
        )
    else:
        report = verify_identities(
            n,
            balls,
            pairs=conf["pairs"] or constants.DEFAULT_PAIRS,
            seed=seed,
            tolerance=conf["tolerance"],
        )
    return report, constants.EXIT_OK if report.passed else constants.EXIT_FAILED


COMMANDS = {
    "expectation": cmd_expectation,
    "dist": cmd_dist,
    "compare": cmd_compare,
    "dominance": cmd_dominance,
    "schur-check": cmd_schur_check,
    "verify": cmd_verify,
}


def _summary(conf, status, label=None):
    if label is None:
        label = "PASS" if status == constants.EXIT_OK else "FAIL"
    return "%s %s\n" % (label, " ".join(conf.command))


def run(argv=None, stdout=None, stderr=None, configure_logging=True):
    """Run one command and return its exit status.

    Nothing is written to the report destination unless the whole report
    was computed.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    # Buffer log messages until the final logging configuration is known.
    initial_handler = logging.handlers.MemoryHandler(100)
    root_logger = logging.getLogger()
    root_logger.addHandler(initial_handler)
    try:
        conf = config.Config(get_config_options())
        target = None
        try:
            conf.parse_args(argv)
            if configure_logging:
                target = setup_logging(conf, stderr).handlers[-1]
        finally:
            # Buffered records only replay into the configured handler.
            root_logger.removeHandler(initial_handler)
            if target is not None:
                initial_handler.setTarget(target)
                initial_handler.flush()
            initial_handler.close()
        log_startup_info()

        command = validate_command(conf)
        formatter = get_formatter(conf["format"])
        result = COMMANDS[command](conf)
        report, status = result[0], result[1]
        label = result[2] if len(result) > 2 else None
        text = formatter.format_report(report)
    except SystemExit as exc:
        # --help and --version
        return exc.code or constants.EXIT_OK
    except errors.BudgetExceeded as exc:
        stderr.write("error: %s\n" % exc)
        return constants.EXIT_BUDGET
    except (errors.InvalidConfiguration, errors.InvalidArgument, errors.InvalidProbabilityVector) as exc:
        stderr.write("usage error: %s\n" % exc)
        return constants.EXIT_USAGE

    if conf["out"]:
        with open(conf["out"], "w") as f:
            f.write(text)
    else:
        stdout.write(text)
    if command in VERIFICATION_COMMANDS:
        stderr.write(_summary(conf, status, label))
    return status


@util.log_fatal_exceptions
def main():
    """ Starts occupancy-schur (assuming CLI)
    """
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
