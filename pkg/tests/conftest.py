from io import StringIO
from typing import Callable, NamedTuple

import pytest

from revolute.cli.cli import run


class CliResult(NamedTuple):
    code: int
    stdout: str
    stderr: str

    @property
    def summary(self) -> dict[str, str]:
        """key=value pairs of the last stdout line."""
        line = self.stdout.strip().splitlines()[-1]
        return dict(pair.split("=", 1) for pair in line.split(" "))


@pytest.fixture(autouse=True)
def no_run_config(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("REVOLUTE_CONFIG", raising=False)


@pytest.fixture
def cli() -> Callable[..., CliResult]:
    def invoke(*argv: str) -> CliResult:
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return CliResult(int(code), stdout.getvalue(), stderr.getvalue())

    return invoke
