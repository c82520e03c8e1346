"""Serializable invariant reports for the command line."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional


@dataclass
class JordanEntry:
    element: str
    partition: list[int]
    sl: bool
    comparisons: dict = field(default_factory=dict)


@dataclass
class InvariantReport:
    expression: str
    variables: list[str]
    field: str
    convention: str
    socle_degree: int
    hilbert_function: list[int]
    decomposition: Optional[list[list[int]]] = None
    n_table: Optional[list[dict]] = None
    jordan: list[JordanEntry] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    timing: Optional[float] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["input"] = {k: d.pop(k) for k in ("expression", "variables", "field", "convention")}
        return {k: v for k, v in d.items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        d = dict(d)
        d.update(d.pop("input"))
        d["jordan"] = [JordanEntry(**e) for e in d.get("jordan", [])]
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "InvariantReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"F = {self.expression}  over {self.field} in {','.join(self.variables)} ({self.convention})",
                 f"socle degree: {self.socle_degree}",
                 f"hilbert function: {tuple(self.hilbert_function)}"]
        if self.decomposition is not None:
            lines.append("symmetric decomposition:")
            for a, row in enumerate(self.decomposition):
                if any(row):
                    lines.append(f"  H({a}) = {tuple(row)}")
        if self.n_table is not None:
            lines.append("N table (i, b): value")
            for c in self.n_table:
                lines.append(f"  ({c['i']}, {c['b']}): {c['value']}")
        for e in self.jordan:
            lines.append(f"jordan type at {e.element}: {tuple(e.partition)}"
                         + ("  [strong Lefschetz]" if e.sl else ""))
            for k, v in e.comparisons.items():
                lines.append(f"  vs {k}: {v}")
        for k, v in self.extra.items():
            lines.append(f"{k}: {v}")
        if self.timing is not None:
            lines.append(f"time: {self.timing:.3f}s")
        return "\n".join(lines)
