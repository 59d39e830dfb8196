"""Full-suite runs and their machine-readable and tabular serialisations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..errors import BudgetExceeded
from .engine import BUDGET_EXCEEDED, FALSIFIED, STATUS_LABELS, SearchConfig, Verdict, check_all
from .registry import GROUPS, all_claims


@dataclass(frozen=True)
class Report:
    config: SearchConfig
    verdicts: tuple[Verdict, ...]

    def records(self) -> list[dict]:
        return [v.to_record() for v in self.verdicts]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in self.records())

    def by_tag(self) -> dict[str, list[Verdict]]:
        out: dict[str, list[Verdict]] = {}
        for v in self.verdicts:
            out.setdefault(v.tag, []).append(v)
        return out

    def statuses(self) -> dict[str, str]:
        """Status per ``tag`` or ``tag@convention`` key, the expectations-file shape."""
        return {_key(v): v.status for v in self.verdicts}

    @property
    def any_falsified(self) -> bool:
        return any(v.status == FALSIFIED for v in self.verdicts)

    def to_table(self) -> str:
        header = ["group", "claim", "stance", "paper-inf or any", "standard-sup", "budget"]
        rows = [header]
        for tag, vs in self.by_tag().items():
            first = vs[0]
            cells = {v.convention: v for v in vs}
            main = cells.get("paper-inf") or cells.get(None) or cells.get("standard-sup")
            sup = cells.get("standard-sup") if main is not cells.get("standard-sup") else None
            rows.append([
                first.group,
                tag,
                first.stance,
                STATUS_LABELS[main.status],
                STATUS_LABELS[sup.status] if sup else "",
                "/".join(str(v.budget) for v in vs),
            ])
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"


def _key(v: Verdict) -> str:
    return f"{v.tag}@{v.convention}" if v.convention else v.tag


def run_suite(cfg: SearchConfig = SearchConfig(), tags=None) -> Report:
    """Check every registered claim (or the given tags), grouped by topic, in registry order."""
    claims = all_claims()
    if tags is not None:
        wanted = set(tags)
        claims = [c for c in claims if c.tag in wanted]
    verdicts = []
    for claim in claims:
        try:
            verdicts.extend(check_all(claim, cfg))
        except BudgetExceeded:
            for conv in claim.conventions(cfg.conventions):
                verdicts.append(Verdict(claim.tag, claim.group, claim.stance, BUDGET_EXCEEDED, 0,
                                        conv.value if conv else None))
    verdicts.sort(key=lambda v: GROUPS.index(v.group))
    return Report(cfg, tuple(verdicts))


def load_manifest() -> list[str]:
    text = resources.files("svnfilter.data").joinpath("claims_manifest.txt").read_text(encoding="utf-8")
    return [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]


def load_expectations() -> dict[str, str]:
    text = resources.files("svnfilter.data").joinpath("expectations.json").read_text(encoding="utf-8")
    return json.loads(text)["statuses"]
