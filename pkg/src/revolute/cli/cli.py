import argparse
import logging
import math
import sys
from typing import Any, Callable, Sequence, TextIO

from export_io.services import build_config, read_config_values
from revolute import settings
from revolute.exceptions import (
    ConfigError,
    DomainError,
    ExportError,
    UnsupportedCaseError,
    UsageError,
    VerificationError,
)

from .codes import ExitStatus
from .commands import COMMANDS, BaseCommand

logger = logging.getLogger(__name__)

ExceptionHandler = Callable[[Exception, TextIO], ExitStatus]

# Flag dest -> RunConfig key; absent flags fall through to REVOLUTE_CONFIG
CONFIG_FLAGS = {
    "m": float,
    "c": float,
    "J": float,
    "K": float,
    "theta_min": float,
    "theta_max": float,
    "samples": int,
    "segments": int,
    "delta": float,
    "out": str,
    "verify_samples": int,
    "tol": float,
}
ANGLE_FLAGS = ("theta_min", "theta_max")


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class CommandLine:
    def __init__(self, commands: dict[str, type[BaseCommand]]) -> None:
        self.commands = commands
        self._handlers: dict[type[Exception], ExceptionHandler] = {}

    def exception_handler(self, exc_class: type[Exception]):
        def decorator(func: ExceptionHandler) -> ExceptionHandler:
            self._handlers[exc_class] = func
            return func

        return decorator

    def _find_handler(self, exc: Exception) -> ExceptionHandler | None:
        for cls in type(exc).__mro__:
            if cls in self._handlers:
                return self._handlers[cls]
        return None

    def create_parser(self, commands: dict[str, BaseCommand]) -> ArgumentParser:
        common = ArgumentParser(add_help=False, allow_abbrev=False)
        for name, kind in CONFIG_FLAGS.items():
            flag = "--" + (name if len(name) == 1 else name.replace("_", "-"))
            common.add_argument(flag, dest=name, type=kind, default=argparse.SUPPRESS)
        common.add_argument(
            "--deg", action="store_true", help="Read angle flags in degrees"
        )
        common.add_argument(
            "--log-level",
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            type=str.upper,
            default=None,
        )

        parser = ArgumentParser(
            prog="revolute",
            allow_abbrev=False,
            description="Surfaces of revolution with rho1 + m*rho2 = c",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)
        for name, command in commands.items():
            subparser = subparsers.add_parser(
                name, help=command.help, parents=[common], allow_abbrev=False
            )
            command.add_arguments(subparser)
        return parser

    def config_values(self, options: dict[str, Any], defaults: dict) -> dict:
        values = dict(defaults)
        if path := settings.config_path():
            values.update(read_config_values(path))
        for name in CONFIG_FLAGS:
            if name in options:
                value = options.pop(name)
                if options.get("deg") and name in ANGLE_FLAGS:
                    value = math.radians(value)
                values[name] = value
        return values

    def _dispatch(
        self, argv: Sequence[str], stdout: TextIO, stderr: TextIO
    ) -> ExitStatus:
        commands = {name: cls(stdout, stderr) for name, cls in self.commands.items()}
        try:
            options = vars(self.create_parser(commands).parse_args(list(argv)))
        except SystemExit as e:
            # --help
            return ExitStatus.SUCCESS if not e.code else ExitStatus.USAGE_ERROR

        if level := options.pop("log_level"):
            logging.getLogger().setLevel(level)

        command = commands[options.pop("command")]
        config = build_config(self.config_values(options, command.defaults))
        logger.debug(f"Running {type(command).__name__} with {config}")
        command.handle(config, **options)
        return ExitStatus.SUCCESS

    def run(
        self,
        argv: Sequence[str],
        stdout: TextIO | None = None,
        stderr: TextIO | None = None,
    ) -> ExitStatus:
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            return self._dispatch(argv, stdout, stderr)
        except Exception as exc:
            handler = self._find_handler(exc)
            if handler is None:
                raise
            return handler(exc, stderr)


cli = CommandLine(COMMANDS)


def _report(exc: Exception, stderr: TextIO, status: ExitStatus) -> ExitStatus:
    logger.error(f"{type(exc).__name__}: {exc}")
    stderr.write(f"error: {exc}\n")
    return status


@cli.exception_handler(UsageError)
def usage_error(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.USAGE_ERROR)


@cli.exception_handler(ConfigError)
def config_error(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.USAGE_ERROR)


@cli.exception_handler(ExportError)
def export_error(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.USAGE_ERROR)


@cli.exception_handler(DomainError)
def domain_error(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.DOMAIN_ERROR)


@cli.exception_handler(UnsupportedCaseError)
def unsupported_case(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.DOMAIN_ERROR)


@cli.exception_handler(VerificationError)
def verification_failed(exc: Exception, stderr: TextIO) -> ExitStatus:
    return _report(exc, stderr, ExitStatus.VERIFICATION_FAILED)


def run(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> ExitStatus:
    return cli.run(argv, stdout, stderr)
