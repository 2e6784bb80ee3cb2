"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-13
@Docs: 命令行子命令
"""

from app.base.base_command import BaseCommand

from .ego_command import EgoCommand
from .gen_command import GenCommand
from .inference_command import HypothesisTestCommand
from .sample_command import SampleCommand
from .series_command import SeriesCommand
from .simulate_command import SimulateCommand
from .stats_command import StatsCommand
from .theory_command import TheoryCommand
from .wpc_command import WpcCommand

ALL_COMMANDS: tuple[type[BaseCommand], ...] = (
    StatsCommand,
    GenCommand,
    TheoryCommand,
    HypothesisTestCommand,
    SampleCommand,
    SeriesCommand,
    WpcCommand,
    EgoCommand,
    SimulateCommand,
)

__all__ = ["ALL_COMMANDS"] + [cls.__name__ for cls in ALL_COMMANDS]
