import argparse
import logging
from typing import Sequence

from stable_tau.common import InputError, reseed
from stable_tau.config import EXIT_PASS
from stable_tau.documents import build_action, build_algebra, load_document
from stable_tau.reports import emit, gabriel_graph, skew_report
from stable_tau.skew import skew_algebra


class SkewCommand:
    name = "skew"
    help = "Build the skew group algebra and its basic reduction"

    def register(self, subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, parents=list(parents))
        parser.set_defaults(handler=self.run)

    def run(self, args: argparse.Namespace) -> int:
        document = load_document(args.file, args.field, args.max_vertices, args.seed)
        if not document.has_group:
            logging.warning("%s has no group block, using the trivial group", document.source)
        reseed(document.options.seed)
        algebra = build_algebra(document)
        action = build_action(document, algebra)
        skew = skew_algebra(action)
        basic = skew.reduction.algebra
        if not basic.split_basic:
            raise InputError("The basic reduction of the skew group algebra is not split basic")
        logging.info("Skew group algebra of dimension %d reduces to dimension %d", skew.algebra.dim, basic.dim)
        emit(skew_report(skew, document.options.seed), args.json_path, gabriel_graph(basic), args.dot_path)
        return EXIT_PASS


def setup(subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
    SkewCommand().register(subparsers, parents)
