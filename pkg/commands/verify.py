import argparse
import logging
from typing import List, Sequence

from stable_tau.checks import CheckResult, base_suite, check_product_oracle, skew_suite
from stable_tau.common import RefusedError, reseed
from stable_tau.config import EXIT_CHECK_FAILURE, EXIT_PASS
from stable_tau.documents import build_action, build_algebra, load_document
from stable_tau.reports import dot_graph, emit, verify_report
from stable_tau.skew import verify_bijection


class VerifyCommand:
    name = "verify"
    help = "Check the stable pair correspondence and every property suite"

    def register(self, subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, parents=list(parents))
        parser.set_defaults(handler=self.run)

    def run(self, args: argparse.Namespace) -> int:
        document = load_document(args.file, args.field, args.max_vertices, args.seed)
        options = document.options
        reseed(options.seed)
        algebra = build_algebra(document)
        action = build_action(document, algebra)
        try:
            bijection = verify_bijection(action, options.max_vertices, options.primes)
        except RefusedError as error:
            logging.error("Refused: %s", error)
            emit(verify_report([], options.seed, refusal=str(error)), args.json_path, None, args.dot_path)
            return EXIT_CHECK_FAILURE

        results: List[CheckResult] = base_suite(bijection.base_quiver, action) + skew_suite(bijection)
        product = check_product_oracle(action, bijection.base_quiver, bijection.base_stable, options.max_vertices)
        if product is not None:
            results.append(product)
        for result in results:
            logging.info("%s %s (%s)", "PASS" if result.passed else "FAIL", result.name, result.detail)

        report = verify_report(results, options.seed, bijection)
        emit(report, args.json_path, dot_graph(bijection.base_quiver), args.dot_path)
        return EXIT_PASS if report["passed"] else EXIT_CHECK_FAILURE


def setup(subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
    VerifyCommand().register(subparsers, parents)
