"""
toric_markov: Markov bases and indispensable binomials of toric ideals.

Exit codes: 0 success, 1 internal consistency check failed,
2 invalid input, 3 resource limit exceeded.
"""

from toric.markov import load_model, vocabulary
from toric.markov.base import get_logger
from toric.markov.exceptions import ConsistencyError, InputError, ResourceLimitExceeded
from toric.markov.fibers import build_nabla, enumerate_fiber
from toric.markov.formatter import emit
from toric.markov.grobner import buchberger, reduce_gb
from toric.markov.indispensable import (
    BinomialSet, DegreeReports, MonomialSet, analyze, dominating_degree,
    indispensable_below, indispensable_binomials, indispensable_monomials,
    indispensable_monomials_at, lattice_certificate, lawrence_uniqueness, markov_basis,
    minimal_degrees, toric_binomials, uniqueness_verdict,
)
from toric.markov.loader import load_run_config, parse_degree, parse_order_matrix
from toric.markov.orders import degrevlex_lowest
from toric.markov.semigroup import lawrence_lift
import argparse
import logging
import sys
import zope.schema.interfaces


EXIT_OK = 0
EXIT_CONSISTENCY = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

COMMAND_HELP = {
    'validate': "Check a model matrix and print it in matrix format",
    'fiber': "List the monomials of one degree",
    'nabla': "Print the gcd complex of one degree: vertices, edges and components",
    'degrees': "Classify the minimal degrees of the toric ideal",
    'grobner': "Reduced Groebner basis of the toric ideal",
    'markov': "A minimal Markov basis",
    'indispensable': "Indispensable binomials (below --degree when given)",
    'monomials': "Indispensable monomials (from --degree when given)",
    'verdict': "Whether the toric ideal has a unique minimal binomial generating set",
    'lawrence-verdict': "Verdict for the Lawrence lifting of the model",
    'report': "Degrees, Markov basis, indispensables and verdict together",
    'certificate': "Check whether the kernel lattice basis already gives the indispensables",
    'lawrence': "Print the Lawrence lifting of the model",
    'kron': "Print the model matrix of a Kronecker model description",
}


def configure_logging(level):
    logger = get_logger()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.handlers = [handler]
    logger.setLevel(level)


# Commands

def degree_argument(config, model):
    if config.auto_degree:
        return dominating_degree(model, **pipeline_options(config))
    return parse_degree(config.degree, model.d)

def pipeline_options(config):
    return {
        'cap': config.fiber_cap,
        'jobs': config.jobs,
        'chain_criterion': config.chain_criterion,
    }

def cmd_validate(config, model):
    return model

def cmd_fiber(config, model):
    return enumerate_fiber(model, degree_argument(config, model), cap=config.fiber_cap)

def cmd_nabla(config, model):
    return build_nabla(cmd_fiber(config, model))

def cmd_degrees(config, model):
    return DegreeReports(minimal_degrees(model, **pipeline_options(config)))

def cmd_grobner(config, model):
    if config.order_matrix_path:
        order = parse_order_matrix(config.order_matrix_path, model.r)
    else:
        order = degrevlex_lowest(config.lowest, model.grading)
    gens = toric_binomials(model, config.chain_criterion)
    return reduce_gb(buchberger(gens, order, chain_criterion=config.chain_criterion))

def cmd_markov(config, model):
    return markov_basis(model, **pipeline_options(config))

def cmd_indispensable(config, model):
    if config.degree:
        degree = degree_argument(config, model)
        return BinomialSet(indispensable_below(model, degree, cap=config.fiber_cap))
    return BinomialSet(indispensable_binomials(model, config.method, **pipeline_options(config)))

def cmd_monomials(config, model):
    if config.degree:
        degree = degree_argument(config, model)
        return MonomialSet(indispensable_monomials_at(model, degree, cap=config.fiber_cap), model.grading)
    return MonomialSet(indispensable_monomials(model, **pipeline_options(config)), model.grading)

def cmd_verdict(config, model):
    return uniqueness_verdict(model, **pipeline_options(config))

def cmd_lawrence_verdict(config, model):
    return lawrence_uniqueness(model, **pipeline_options(config))

def cmd_report(config, model):
    return analyze(model, config.method, **pipeline_options(config))

def cmd_certificate(config, model):
    return lattice_certificate(model, jobs=config.jobs, chain_criterion=config.chain_criterion)

def cmd_lawrence(config, model):
    return lawrence_lift(model)

def cmd_kron(config, model):
    return model

COMMANDS = {
    'validate': cmd_validate,
    'fiber': cmd_fiber,
    'nabla': cmd_nabla,
    'degrees': cmd_degrees,
    'grobner': cmd_grobner,
    'markov': cmd_markov,
    'indispensable': cmd_indispensable,
    'monomials': cmd_monomials,
    'verdict': cmd_verdict,
    'lawrence-verdict': cmd_lawrence_verdict,
    'report': cmd_report,
    'certificate': cmd_certificate,
    'lawrence': cmd_lawrence,
    'kron': cmd_kron,
}


# Argument parsing

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input_path", nargs="?", default=None, help="Matrix file: 'd r' header and d rows")
    common.add_argument("--kron", dest="kron_path", default=None, help="Kronecker model description (YAML)")
    common.add_argument("--model", dest="model_name", default=None, help="Builtin model, e.g. paper-example")
    common.add_argument("--config", dest="config_path", default=None, help="Run configuration file (YAML)")
    common.add_argument("--degree", default=None, help="Degree as 'a_1 ... a_d', or 'auto'")
    common.add_argument("--lowest", type=int, default=None, help="Lowest variable of the reverse lexicographic order")
    common.add_argument("--order-matrix", dest="order_matrix_path", default=None, help="Explicit order matrix file")
    common.add_argument("--method", default=None, choices=[term.value for term in vocabulary.methods])
    common.add_argument("--format", dest="output_format", default=None, choices=[term.value for term in vocabulary.output_formats])
    common.add_argument("--fiber-cap", dest="fiber_cap", type=int, default=None, help="Maximum monomials per fiber (default: 1000000)")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes (default: 1)")
    common.add_argument("--chain-criterion", dest="chain_criterion", action="store_true", default=None, help="Use the chain criterion in Buchberger's algorithm")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only log errors")

    parser = argparse.ArgumentParser(
        prog="toric_markov",
        description="Markov bases, indispensable binomials and monomials of toric ideals.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command")
    for command, help_text in COMMAND_HELP.items():
        subparsers.add_parser(command, parents=[common], help=help_text)
    return parser

def config_from_args(args):
    overrides = {
        name: getattr(args, name)
        for name in (
            'input_path', 'kron_path', 'model_name', 'degree', 'lowest', 'order_matrix_path',
            'method', 'output_format', 'fiber_cap', 'jobs', 'chain_criterion',
        )
    }
    if args.verbose:
        overrides['log_level'] = 'DEBUG'
    elif args.quiet:
        overrides['log_level'] = 'ERROR'
    return load_run_config(args.command, args.config_path, **overrides)

def run(config):
    "Execute a RunConfig and return the rendered output"
    model = load_model(config.input_path, config.kron_path, config.model_name)
    result = COMMANDS[config.command](config, model)
    return emit(result, config.output_format)

def report_error(exc):
    title = getattr(exc, 'title', None) or exc.__doc__ or exc.__class__.__name__
    sys.stderr.write(f"{title}: {exc}\n")

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    configure_logging(logging.WARNING)
    try:
        config = config_from_args(args)
        configure_logging(getattr(logging, config.log_level))
        sys.stdout.write(run(config))
    except (InputError, zope.schema.interfaces.ValidationError) as exc:
        report_error(exc)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        report_error(exc)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        report_error(exc)
        return EXIT_CONSISTENCY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
