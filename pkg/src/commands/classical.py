"""
Classical commands - validate, Alexander, Conway and signatures.
"""

import argparse
from typing import Optional

from ..data import FillingSlopes, FramedLinkData, GoeritzData, SeifertData
from ..documents import InputData
from ..exact import RootOfUnity
from ..invariants import (
    alexander,
    conway,
    conway_at_omega,
    goeritz_signature,
    signature_phase,
    tristram_levine,
)
from .base import KIND_NAMES, BaseCommand, CommandResult

MINUS_ONE = RootOfUnity(1, 2)


class ValidateCommand(BaseCommand):
    """Check a document and report its kind and size."""

    input_kinds = (SeifertData, GoeritzData, FramedLinkData, FillingSlopes)

    @property
    def name(self) -> str:
        return "validate"

    @property
    def help(self) -> str:
        return "Validate an input document"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        kind = KIND_NAMES[type(data).__name__]
        if isinstance(data, FramedLinkData):
            size = data.linking_matrix.rows
        elif isinstance(data, FillingSlopes):
            size = data.b.rows
        else:
            size = data.size
        count = len(data.components)
        self.logger.success(f"{args.input} is a valid {kind} document")
        return CommandResult(
            f"valid {kind} {size}x{size}, {count} component{'s' if count != 1 else ''}",
            {"kind": kind, "size": size, "components": list(data.components)},
        )


class AlexanderCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "alexander"

    @property
    def help(self) -> str:
        return "Alexander polynomial det(tM - M^T), canonical form"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        return CommandResult(alexander(data.matrix).render())


class ConwayCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "conway"

    @property
    def help(self) -> str:
        return "Conway polynomial in z"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        return CommandResult(conway(data.matrix).render("z"))


class SignatureCommand(BaseCommand):
    """sigma_{-1} of a Seifert matrix, or sign(G) + e/2 for Goeritz data."""

    input_kinds = (SeifertData, GoeritzData)

    @property
    def name(self) -> str:
        return "signature"

    @property
    def help(self) -> str:
        return "Knot signature from a Seifert or Goeritz document"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        if isinstance(data, GoeritzData):
            value = goeritz_signature(data)
        else:
            value = tristram_levine(data.matrix, MINUS_ONE, *self.precision)
        return CommandResult(str(value), {"signature": value})


class TristramLevineCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "tl-signature"

    @property
    def help(self) -> str:
        return "Tristram-Levine signature at a root of unity"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_omega(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        value = tristram_levine(data.matrix, self.omega(args), *self.precision)
        return CommandResult(str(value), {"signature": value, "omega": args.omega})


class ConwayPhaseCommand(BaseCommand):
    """Conway value at i|1 - w| and its sign, i^sigma_w."""

    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "conway-phase"

    @property
    def help(self) -> str:
        return "Sign of the Conway polynomial at i|1 - w| (equals i^sigma_w)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        self.add_omega(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        omega = self.omega(args)
        bits, cap = self.precision
        phase = signature_phase(data.matrix, omega, bits, cap)
        value = conway_at_omega(data.matrix, omega, bits)
        return CommandResult(f"{phase:+d}", {"phase": phase, "value": value})
