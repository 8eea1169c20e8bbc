"""Lightweight diagnostic report container used by the inspection routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Ordered key/value diagnostic document with warnings and a verdict.

    Field insertion order is preserved so rendered output is deterministic.
    """

    title: str
    fields: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    verdict: str | None = None

    def add(self, key: str, value) -> None:
        self.fields[key] = value

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    @property
    def clean(self) -> bool:
        return not self.warnings

    def to_dict(self) -> dict:
        out = {"title": self.title}
        out.update(self.fields)
        if self.verdict is not None:
            out["verdict"] = self.verdict
        out["warnings"] = list(self.warnings)
        return out

    def to_text(self) -> str:
        lines = [f"# {self.title}"]
        for key, value in self.fields.items():
            lines.append(f"{key}: {_render(value)}")
        if self.verdict is not None:
            lines.append(f"verdict: {self.verdict}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _render(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, complex):
        return f"{value.real!r}{value.imag:+}j".replace("+-", "-")
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    return str(value)
