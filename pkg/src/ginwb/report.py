"""Report documents shared by every CLI subcommand.

JSON is the contract.  `comparable()` excludes wall-clock timings so two runs on
the same inputs serialize to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from importlib import metadata


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.0.0+local"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def inputs_digest(inputs: dict) -> str:
    return hashlib.sha256(canonical_json(inputs).encode()).hexdigest()


@dataclass
class ReportDocument:
    command: str
    inputs: dict
    sections: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    version: str = field(default_factory=tool_version)

    @property
    def digest(self) -> str:
        return inputs_digest({"command": self.command, "inputs": self.inputs})

    def add(self, name: str, value) -> None:
        if name in self.sections:
            raise KeyError(f"section {name!r} already present")
        self.sections[name] = value

    def flag(self, item: str, printed, computed, module: str | None = None) -> None:
        self.discrepancies.append({
            "module": module or self.command,
            "item": item,
            "printed": str(printed),
            "computed": str(computed),
        })

    @contextmanager
    def timed(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def comparable(self) -> dict:
        return {
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "inputs_digest": self.digest,
            "sections": self.sections,
            "discrepancies": self.discrepancies,
        }

    def to_json(self) -> dict:
        out = self.comparable()
        out["timings"] = dict(sorted(self.timings.items()))
        return out

    def comparable_text(self) -> str:
        return json.dumps(self.comparable(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        lines = [f"ginwb {self.command} (version {self.version})"]
        for k, v in sorted(self.inputs.items()):
            lines.append(f"  {k}: {v}")
        for name, value in self.sections.items():
            lines.append("")
            lines.append(f"[{name}]")
            lines.extend(_render(value, "  "))
        lines.append("")
        if self.discrepancies:
            lines.append(f"discrepancies ({len(self.discrepancies)}):")
            for d in self.discrepancies:
                lines.append(f"  - {d['module']}: {d['item']}")
                lines.append(f"      printed:  {d['printed']}")
                lines.append(f"      computed: {d['computed']}")
        else:
            lines.append("discrepancies: none")
        return "\n".join(lines) + "\n"


def _render(value, indent: str) -> list:
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{indent}{k}:")
                out.extend(_render(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {_scalar(v)}")
        return out
    if isinstance(value, list):
        if _flat(value):
            return [indent + _scalar(value)]
        out = []
        for item in value:
            sub = _render(item, indent + "  ")
            if sub:
                out.append(indent + "- " + sub[0].strip())
                out.extend(sub[1:])
        return out
    return [indent + _scalar(value)]


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)
