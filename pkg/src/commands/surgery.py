"""
Surgery commands - Linking numbers after Dehn surgery and filling.
"""

import argparse
from typing import Optional

from ..data import FillingSlopes, FramedLinkData, GoeritzData
from ..documents import InputData
from ..exact import render_rational
from ..linalg import unimodular_split
from ..surgery import (
    filling_lk_delta,
    lk_in_surgered_manifold,
    reduce_linking_matrix,
    surgery_duality,
)
from .base import BaseCommand, CommandResult, parse_pair


class SurgeryLkCommand(BaseCommand):
    input_kinds = (FramedLinkData,)

    @property
    def name(self) -> str:
        return "surgery-lk"

    @property
    def help(self) -> str:
        return "Linking number of two satellites in the surgered manifold"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--pair", type=str, required=True, help="Satellite pair, e.g. K1,K2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        value = lk_in_surgered_manifold(data, parse_pair(args.pair))
        return CommandResult(render_rational(value), {"value": value})


class SplitCommand(BaseCommand):
    """Split a symmetric matrix as P^T A P = B + 0."""

    input_kinds = (GoeritzData, FramedLinkData)

    @property
    def name(self) -> str:
        return "split"

    @property
    def help(self) -> str:
        return "Unimodular split of a symmetric matrix into a nonsingular block and a zero block"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        if isinstance(data, GoeritzData):
            p, b = unimodular_split(data.matrix)
            corank = data.size - b.rows
        else:
            p, b, corank = reduce_linking_matrix(data.linking_matrix)
        text = f"P =\n{p.render()}\nB =\n{b.render()}\ncorank = {corank}"
        return CommandResult(text, {"P": p, "B": b, "corank": corank})


class SurgeryDualCommand(BaseCommand):
    input_kinds = (FillingSlopes,)

    @property
    def name(self) -> str:
        return "surgery-dual"

    @property
    def help(self) -> str:
        return "Surgery-linking matrices G = Q^-1 B and H = -Q^-1 B^-1"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        g, h = surgery_duality(data)
        return CommandResult(f"G =\n{g.render()}\nH =\n{h.render()}", {"G": g, "H": h})


class FillingLkCommand(BaseCommand):
    input_kinds = (FillingSlopes,)

    @property
    def name(self) -> str:
        return "filling-lk"

    @property
    def help(self) -> str:
        return "Change of a linking number between the mu and delta fillings"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--pair", type=str, required=True, help="Component pair, e.g. K1,K2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        first, second = parse_pair(args.pair)
        value = filling_lk_delta(data, data.vector(first), data.vector(second))
        return CommandResult(render_rational(value), {"value": value})
