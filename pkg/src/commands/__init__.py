"""
Commands module - One class per lnk subcommand.
"""

from .base import BaseCommand, CommandResult
from .classical import (
    AlexanderCommand,
    ConwayCommand,
    ConwayPhaseCommand,
    SignatureCommand,
    TristramLevineCommand,
    ValidateCommand,
)
from .covers import (
    BranchedLkCommand,
    BranchedMatrixCommand,
    DoubleCoverCommand,
    DoubleCoverInvariantCommand,
    DualBasisCommand,
    EtaCommand,
    HomologyOrderCommand,
    InfiniteLkCommand,
    LambdaGoeritzCommand,
    LambdaKLCommand,
    LambdaOmegaCommand,
    LambdaTCommand,
)
from .crossing import (
    ConwayRatioCommand,
    CrossingAlexanderCommand,
    CrossingMatrixCommand,
    CrossingSignatureCommand,
    CrossingSignatureUnorientedCommand,
)
from .selftest import SelftestCommand
from .surgery import FillingLkCommand, SplitCommand, SurgeryDualCommand, SurgeryLkCommand

# Order shown in --help
COMMAND_CLASSES = [
    ValidateCommand,
    AlexanderCommand,
    ConwayCommand,
    SignatureCommand,
    TristramLevineCommand,
    ConwayPhaseCommand,
    LambdaGoeritzCommand,
    DoubleCoverCommand,
    DoubleCoverInvariantCommand,
    LambdaTCommand,
    LambdaOmegaCommand,
    BranchedMatrixCommand,
    HomologyOrderCommand,
    LambdaKLCommand,
    BranchedLkCommand,
    InfiniteLkCommand,
    EtaCommand,
    DualBasisCommand,
    SurgeryLkCommand,
    SurgeryDualCommand,
    FillingLkCommand,
    SplitCommand,
    CrossingAlexanderCommand,
    CrossingSignatureCommand,
    CrossingSignatureUnorientedCommand,
    CrossingMatrixCommand,
    ConwayRatioCommand,
    SelftestCommand,
]

__all__ = [
    "BaseCommand",
    "CommandResult",
    "COMMAND_CLASSES",
] + [cls.__name__ for cls in COMMAND_CLASSES]
