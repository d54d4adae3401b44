"""
Cover commands - Linking pairings in double, p-fold and infinite cyclic covers.
"""

import argparse
from typing import Optional

from ..covers import (
    branched_matrix,
    double_cover_invariant,
    double_cover_lk,
    dual_basis_linking,
    eta_function,
    fox_order,
    goeritz_lambda,
    homology_order,
    infinite_cyclic_lk,
    lambda_kl,
    p_fold_lk,
    seifert_lambda_omega,
    seifert_lambda_t,
)
from ..data import GoeritzData, SeifertData
from ..documents import InputData
from ..exact import render_rational
from .base import BaseCommand, CommandResult, parse_lift_pair, parse_pair


def _add_pair(parser: argparse.ArgumentParser, example: str) -> None:
    parser.add_argument("--pair", type=str, required=True, help=f"Component pair, e.g. {example}")


def _add_p(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="Number of sheets (p >= 2)")


class LambdaGoeritzCommand(BaseCommand):
    input_kinds = (GoeritzData,)

    @property
    def name(self) -> str:
        return "lambda-goeritz"

    @property
    def help(self) -> str:
        return "Goeritz pairing V(K_i) G^-1 V(K_j)^T"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        i, j = parse_pair(args.pair)
        value = goeritz_lambda(data, i, j)
        return CommandResult(render_rational(value), {"value": value})


class DoubleCoverCommand(BaseCommand):
    input_kinds = (GoeritzData,)

    @property
    def name(self) -> str:
        return "double-cover"

    @property
    def help(self) -> str:
        return "Linking number of two lifts in the double branched cover"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1@1,K2@2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        first, second = parse_lift_pair(args.pair)
        value = double_cover_lk(data, first, second)
        return CommandResult(render_rational(value), {"value": value})


class DoubleCoverInvariantCommand(BaseCommand):
    input_kinds = (GoeritzData,)

    @property
    def name(self) -> str:
        return "double-cover-invariant"

    @property
    def help(self) -> str:
        return "|2 lambda(K_i, K_j) - lk(K_i, K_j)|, independent of the surface"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        i, j = parse_pair(args.pair)
        value = double_cover_invariant(data, i, j)
        return CommandResult(render_rational(value), {"value": value})


class LambdaTCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "lambda-t"

    @property
    def help(self) -> str:
        return "V(K_i) (tM - M^T)^-1 V(K_j)^T"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        i, j = parse_pair(args.pair)
        value = seifert_lambda_t(data, i, j)
        return CommandResult(value.render(), {"value": value})


class LambdaOmegaCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "lambda-omega"

    @property
    def help(self) -> str:
        return "Certified V(K_i) G_w^-1 V(K_j)^T at a root of unity"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2")
        self.add_omega(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        i, j = parse_pair(args.pair)
        value = seifert_lambda_omega(data, i, j, self.omega(args), *self.precision)
        return CommandResult(value.render(), {"value": value})


class BranchedMatrixCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "branched-matrix"

    @property
    def help(self) -> str:
        return "Presentation matrix M_p of H_1 of the p-fold branched cover"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_p(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        matrix = branched_matrix(data.matrix, args.p)
        return CommandResult(matrix.render(), {"matrix": matrix})


class HomologyOrderCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "homology-order"

    @property
    def help(self) -> str:
        return "|det M_p|, the order of H_1 of the p-fold branched cover (0 if infinite)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_p(parser)
        parser.add_argument(
            "--check",
            action="store_true",
            help="Also compute the product of |Delta| over the p-th roots of unity",
        )

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        order = homology_order(data.matrix, args.p)
        payload = {"order": order}
        if args.check:
            fox = fox_order(data.matrix, args.p, *self.precision)
            payload["fox_order"] = fox
            if fox != order:
                self.logger.error(f"Determinant {order} differs from the Fox product {fox}")
            else:
                self.logger.success("Determinant matches the Fox product")
        return CommandResult(str(order), payload)


class LambdaKLCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "lambda-kl"

    @property
    def help(self) -> str:
        return "V_p^k(K_i) M_p^-1 V_p^l(K_j)^T"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2")
        _add_p(parser)
        parser.add_argument("--k", type=int, required=True, help="Sheet of K_i (1..p-1)")
        parser.add_argument("--l", type=int, required=True, help="Sheet of K_j (1..p-1)")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        i, j = parse_pair(args.pair)
        value = lambda_kl(data, args.p, args.k, args.l, i, j)
        return CommandResult(render_rational(value), {"value": value})


class BranchedLkCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "branched-lk"

    @property
    def help(self) -> str:
        return "Linking number of two lifts in the p-fold branched cover"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1@1,K1@2")
        _add_p(parser)

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        first, second = parse_lift_pair(args.pair)
        value = p_fold_lk(data, args.p, first, second)
        return CommandResult(render_rational(value), {"value": value})


class InfiniteLkCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "infinite-lk"

    @property
    def help(self) -> str:
        return "Linking pairing in the infinite cyclic cover (K@m is the m-th deck translate)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_pair(parser, "K1,K2 or K1@0,K2@1")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        (i, m), (j, n) = parse_lift_pair(args.pair, default_sheet=0)
        value = infinite_cyclic_lk(data, i, j, (m, n))
        return CommandResult(value.render(), {"value": value})


class EtaCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "eta"

    @property
    def help(self) -> str:
        return "eta function (1 - t) lambda(K_i, K_i)(t)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--component", type=str, required=True, help="Component name")

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        value = eta_function(data, args.component)
        return CommandResult(value.render(), {"value": value})


class DualBasisCommand(BaseCommand):
    input_kinds = (SeifertData,)

    @property
    def name(self) -> str:
        return "dual-basis"

    @property
    def help(self) -> str:
        return "The matrix (1 - t)(tM - M^T)^-1"

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        matrix = dual_basis_linking(data.matrix)
        return CommandResult(matrix.render(), {"matrix": matrix})
