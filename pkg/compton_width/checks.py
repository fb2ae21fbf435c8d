#!/usr/bin/env python3
"""Collection and reporting of numerical checks."""
from __future__ import annotations

import math
import sys
import textwrap
import typing

from compton_width.constants import CheckCode
from compton_width.constants import Colors
from compton_width.exception import NumericalCheckError

_STATUS_STYLE = {
    "Fatal": (Colors.RED, "❌", "X"),
    "Warning": (Colors.ORANGE, "💡", "i"),
    "Passed": (Colors.GREEN, "✔", "+"),
}


class CheckLog:
    """Collects check messages of one experiment.

    Messages are collected instead of printed immediately so that results with
    the same code can be consolidated and the exception raised only once.
    """

    def __init__(self, name: str = "", *, silent: bool = False) -> None:
        self.name = name
        self.messages: typing.List[dict] = []
        self.last_read_index = 0
        self.silent = silent

    def add_message(
        self,
        code: CheckCode,
        *,
        passed: bool,
        fatal: bool = True,
        details: str = "",
        value: typing.Optional[float] = None,
        tolerance: typing.Optional[float] = None,
    ) -> None:
        """Add a check message."""
        # do not add duplicates
        if any(
            code.code == msg["code"] and details == msg["details"]
            for msg in self.messages
        ):
            return

        self.messages.append(
            {
                "code": code.code,
                "label": code.label,
                "message": code.message,
                "passed": passed,
                "is_fatal": (not passed) and fatal,
                "details": details,
                "value": value,
                "tolerance": tolerance,
            }
        )

    def check(
        self,
        code: CheckCode,
        deviation: float,
        tolerance: float,
        *,
        details: str = "",
        fatal: bool = True,
    ) -> bool:
        """Record a passed or failed message from |deviation| <= tolerance."""
        passed = math.isfinite(deviation) and abs(deviation) <= tolerance
        self.add_message(
            code,
            passed=passed,
            fatal=fatal,
            details=details,
            value=float(deviation),
            tolerance=float(tolerance),
        )
        return passed

    def warn(self, code: CheckCode, *, details: str = "") -> None:
        """Record a non-fatal warning."""
        self.add_message(code, passed=False, fatal=False, details=details)

    def print_messages(self) -> None:
        """Print the messages added since the last call, most severe first."""
        pending = self.messages[self.last_read_index :]
        self.last_read_index = len(self.messages)
        if not pending or self.silent:
            return

        by_code: typing.Dict[str, typing.List[dict]] = {}
        for message in pending:
            by_code.setdefault(message["code"], []).append(message)
        unicode_output = str(sys.stdout.encoding).lower().startswith("utf")

        if self.name:
            print(f"Checks of {self.name}:")
        for status, (color, symbol, fallback) in _STATUS_STYLE.items():
            for code, group in by_code.items():
                if _status(group) != status:
                    continue
                marker = symbol if unicode_output else fallback
                print(f"{color}{marker} {status}{Colors.END}: {group[0]['label']} ({code})")
                for message in group:
                    _print_bullet_message(_describe(message))

    def check_status(self) -> None:
        """Print the collected messages and raise if any of them is fatal."""
        self.print_messages()

        if self.has_fatal_errors():
            raise NumericalCheckError(self)

    def has_fatal_errors(self) -> bool:
        """Check if there are any fatal errors."""
        return any(m["is_fatal"] for m in self.messages)

    def extend(self, other: CheckLog) -> None:
        """Merge the messages of another log."""
        for message in other.messages:
            if message not in self.messages:
                self.messages.append(message)

    def to_dict(self) -> dict:
        """JSON diagnostic of the log."""
        return {
            "name": self.name,
            "passed": not self.has_fatal_errors(),
            "messages": self.messages,
        }


def _status(group: typing.List[dict]) -> str:
    if any(m["is_fatal"] for m in group):
        return "Fatal"
    if all(m["passed"] for m in group):
        return "Passed"
    return "Warning"


def _describe(message: dict) -> str:
    text = message["details"] or message["message"]
    if message["value"] is not None and message["tolerance"] is not None:
        text += f" [deviation {message['value']:.3g}, tolerance {message['tolerance']:.3g}]"
    return text


def _print_bullet_message(message: str, indent: int = 2, bullet: str = "-") -> None:
    if not message:
        return
    wrapper = textwrap.TextWrapper(
        width=120,
        initial_indent=" " * indent + bullet + " ",
        subsequent_indent=" " * (indent + len(bullet) + 1),
    )
    print(wrapper.fill(message.strip()))
