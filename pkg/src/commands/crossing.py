"""
Crossing commands - Crossing changes as 1/n-surgery along a disk boundary.
"""

import argparse
from typing import Optional

from ..data import GoeritzData, SeifertData
from ..documents import InputData, to_document
from ..invariants import (
    conway_ratio_identity,
    crossing_change_alexander,
    crossing_change_goeritz,
    crossing_change_seifert,
    crossing_change_signature,
    crossing_change_signature_unoriented,
    goeritz_disk_lambda,
)
from .base import BaseCommand, CommandResult


class CrossingAlexanderCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "crossing-alexander"

    @property
    def help(self) -> str:
        return "Alexander polynomial after the crossing change"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_crossing(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        value = crossing_change_alexander(data.matrix, self.crossing_spec(args))
        return CommandResult(value.render())


class CrossingSignatureCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "crossing-signature"

    @property
    def help(self) -> str:
        return "Predicted Tristram-Levine signature after the crossing change"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_crossing(parser)
        self.add_omega(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        value = crossing_change_signature(
            data.matrix, self.crossing_spec(args), self.omega(args), *self.precision
        )
        return CommandResult(str(value), {"signature": value, "omega": args.omega})


class CrossingSignatureUnorientedCommand(BaseCommand):
    input_kinds = (GoeritzData,)

    @property
    def name(self) -> str:
        return "crossing-signature-unoriented"

    @property
    def help(self) -> str:
        return "Predicted signature after a crossing change on an unoriented surface"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_crossing(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        spec = self.crossing_spec(args)
        value = crossing_change_signature_unoriented(data, spec)
        lam = goeritz_disk_lambda(data, spec)
        self.logger.debug(f"lambda(dD) = {lam}, 2 n lambda = {2 * spec.n * lam}")
        return CommandResult(str(value), {"signature": value, "disk_lambda": lam})


class CrossingMatrixCommand(BaseCommand):
    """Surface matrix of the changed knot, as a document."""

    input_kinds = (SeifertData, GoeritzData)

    @property
    def name(self) -> str:
        return "crossing-matrix"

    @property
    def help(self) -> str:
        return "Seifert or Goeritz matrix of the knot after the crossing change"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_crossing(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        spec = self.crossing_spec(args)
        if isinstance(data, GoeritzData):
            changed = crossing_change_goeritz(data, spec)
            text = f"{changed.matrix.render()}\neuler_number = {changed.euler_number}"
            return CommandResult(text, {"document": to_document(changed)})
        matrix = crossing_change_seifert(data.matrix, spec)
        document = to_document(SeifertData.build(matrix))
        return CommandResult(matrix.render(), {"document": document})


class ConwayRatioCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "conway-ratio"

    @property
    def help(self) -> str:
        return "Both sides of the Conway ratio identity and the sign of the Conway ratio"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_crossing(parser)
        self.add_omega(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        identity = conway_ratio_identity(
            data.matrix, self.crossing_spec(args), self.omega(args), *self.precision
        )
        agree = identity.lhs.overlaps(identity.rhs)
        if not agree:
            self.logger.error("The two sides of the Conway ratio identity do not overlap")
        text = (
            f"lhs = {identity.lhs.render()}\n"
            f"rhs = {identity.rhs.render()}\n"
            f"ratio sign = {identity.ratio_sign:+d}"
        )
        return CommandResult(
            text,
            {
                "lhs": identity.lhs,
                "rhs": identity.rhs,
                "ratio_sign": identity.ratio_sign,
                "overlap": agree,
            },
        )
