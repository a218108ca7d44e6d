import argparse
import logging
from typing import Sequence

from stable_tau.common import reseed
from stable_tau.config import EXIT_PASS
from stable_tau.documents import build_action, build_algebra, load_document
from stable_tau.group_action import stable_filter
from stable_tau.mutation import enumerate_pairs
from stable_tau.reports import dot_graph, emit, enumerate_report


class EnumerateCommand:
    name = "enumerate"
    help = "Enumerate the support tau-tilting pairs and their exchange quiver"

    def register(self, subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, parents=list(parents))
        parser.set_defaults(handler=self.run)

    def run(self, args: argparse.Namespace) -> int:
        document = load_document(args.file, args.field, args.max_vertices, args.seed)
        reseed(document.options.seed)
        algebra = build_algebra(document)
        action = build_action(document, algebra)
        quiver = enumerate_pairs(algebra, document.options.max_vertices)
        stable = stable_filter(quiver, action)
        logging.info("%d pairs, %d arrows, %d stable", len(quiver), len(quiver.arrows), len(stable))
        report = enumerate_report(quiver, action.group, document.options.seed)
        emit(report, args.json_path, dot_graph(quiver), args.dot_path)
        return EXIT_PASS


def setup(subparsers: argparse._SubParsersAction, parents: Sequence[argparse.ArgumentParser]) -> None:
    EnumerateCommand().register(subparsers, parents)
