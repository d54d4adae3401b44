"""
Base Command - Abstract class for the lnk subcommands.
"""

import argparse
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple, Type

from ..config import Config
from ..documents import InputData, load_and_validate
from ..errors import InputError, InvalidSpecError
from ..exact import (
    DEFAULT_PRECISION,
    DEFAULT_PRECISION_CAP,
    ComplexApprox,
    RootOfUnity,
    render_rational,
)
from ..invariants import CrossingChangeSpec
from ..linalg import ExactMatrix
from ..logger import get_logger

KIND_NAMES = {
    "SeifertData": "seifert",
    "GoeritzData": "goeritz",
    "FramedLinkData": "framed_link",
    "FillingSlopes": "filling",
}


@dataclass
class CommandResult:
    """Text shown on stdout plus extra JSON fields."""

    text: str
    payload: Dict[str, Any] = field(default_factory=dict)


def to_json_value(value: Any) -> Any:
    """JSON form of an exact or certified value; rationals become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return render_rational(value)
    if isinstance(value, ComplexApprox):
        return value.to_json()
    if isinstance(value, ExactMatrix):
        return [[to_json_value(x) for x in row] for row in value.to_lists()]
    if isinstance(value, (list, tuple)):
        return [to_json_value(x) for x in value]
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    return value.render()


def parse_pair(text: str) -> Tuple[str, str]:
    """Parse "A,B"."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise InputError(f"Expected a pair A,B, got {text!r}")
    return parts[0], parts[1]


def parse_lift(text: str, default_sheet: Optional[int] = None) -> Tuple[str, int]:
    """Parse "K1@2" (component K1, sheet 2)."""
    name, sep, sheet = text.partition("@")
    if not sep:
        if default_sheet is None:
            raise InputError(f"Expected NAME@SHEET, got {text!r}")
        return name.strip(), default_sheet
    try:
        return name.strip(), int(sheet)
    except ValueError:
        raise InputError(f"Sheet of {text!r} is not an integer") from None


def parse_lift_pair(
    text: str, default_sheet: Optional[int] = None
) -> Tuple[Tuple[str, int], Tuple[str, int]]:
    first, second = parse_pair(text)
    return parse_lift(first, default_sheet), parse_lift(second, default_sheet)


def parse_vector(text: str) -> Tuple[int, ...]:
    """Parse "1,0,-2"; the empty string is the empty vector."""
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"Expected comma-separated integers, got {text!r}") from None


class BaseCommand(ABC):
    """
    Abstract subcommand (Template Method Pattern).

    Subclasses must implement:
    - name: subcommand name
    - help: one-line description
    - compute(): the computation on validated input
    """

    input_kinds: Tuple[Type[Any], ...] = ()

    def __init__(self) -> None:
        """Initialize the command; the configuration is bound by run()."""
        self.config: Optional[Config] = None
        self.logger = get_logger()

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name (e.g. 'alexander', 'lambda-t')."""
        pass

    @property
    @abstractmethod
    def help(self) -> str:
        pass

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Register subcommand-specific arguments."""
        pass

    @abstractmethod
    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        """
        Run the computation.

        Args:
            data: Validated input document, or None for commands without input
            args: Parsed arguments

        Returns:
            Result to print
        """
        pass

    # Shared argument groups

    @staticmethod
    def add_omega(parser: argparse.ArgumentParser, default: Optional[str] = "1/2") -> None:
        parser.add_argument(
            "--omega",
            type=str,
            default=default,
            help="Root of unity as a fraction NUM/DEN of a full turn (default: 1/2, i.e. -1)",
        )

    @staticmethod
    def add_crossing(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--v", type=str, required=True, help="Disk linking vector, e.g. 1,0")
        parser.add_argument("--n", type=int, required=True, help="Surgery coefficient 1/n (n != 0)")
        parser.add_argument("--epsilon", type=int, default=1, help="Band sign +1 or -1")
        parser.add_argument(
            "--disk-link", type=int, default=0, help="|lk(dD, K)| (unoriented changes only)"
        )

    def omega(self, args: argparse.Namespace) -> RootOfUnity:
        return RootOfUnity.from_angle(args.omega)

    def crossing_spec(self, args: argparse.Namespace) -> CrossingChangeSpec:
        if args.epsilon not in (1, -1):
            raise InvalidSpecError(f"--epsilon must be 1 or -1, got {args.epsilon}")
        return CrossingChangeSpec(parse_vector(args.v), args.n, args.epsilon, args.disk_link)

    @property
    def precision(self) -> Tuple[int, int]:
        if self.config is None:
            return DEFAULT_PRECISION, DEFAULT_PRECISION_CAP
        return self.config.precision, self.config.precision_cap

    # Template

    def load(self, args: argparse.Namespace) -> Optional[InputData]:
        """
        Load and validate the input document.

        Raises:
            InputError: If the command needs input of another kind
        """
        if not self.input_kinds:
            return None
        if not getattr(args, "input", None):
            raise InputError(f"{self.name} needs --input FILE")
        data = load_and_validate(args.input)
        if not isinstance(data, self.input_kinds):
            expected = " or ".join(KIND_NAMES[kind.__name__] for kind in self.input_kinds)
            actual = KIND_NAMES[type(data).__name__]
            raise InputError(f"{self.name} needs a {expected} document, got {actual}")
        return data

    def emit(self, result: CommandResult, output_format: str) -> None:
        if output_format == "json":
            body = {"text": result.text}
            body.update({key: to_json_value(value) for key, value in result.payload.items()})
            document = {"command": self.name, "result": body}
            self.logger.result(json.dumps(document, ensure_ascii=False))
        else:
            self.logger.result(result.text)

    def run(self, args: argparse.Namespace, config: Config) -> int:
        """
        Load, compute and print (main method).

        Args:
            args: Parsed arguments
            config: Validated configuration (precision settings)

        Returns:
            Exit code 0; failures propagate as LinkingError
        """
        self.config = config
        self.logger.debug(f"Running {self.name} with {self.config!r}")
        data = self.load(args)
        result = self.compute(data, args)
        self.emit(result, getattr(args, "format", "text"))
        return 0
