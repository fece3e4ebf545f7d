#!/usr/bin/env python3
"""Audit the non-extendability facts around every longest cycle of every
non-Hamiltonian graph up to a given order and print per-item tallies.

Usage:
    python scripts/audit_sweep.py --max-n 8
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from adh_hamilton.audit import ENDPOINT_ITEM, ITEMS, audit_graph
from adh_hamilton.graph import parse_graph6
from adh_hamilton.oracle import hamiltonian_oracle

sys.path.insert(0, str(Path(__file__).resolve().parent))
from gen_noniso import ensure_streams  # noqa: E402


@dataclass
class AuditConfig:
    max_n: int = 8
    data_dir: Path = Path("data")
    examples: int = 3  # violating records printed per item


def run(cfg: AuditConfig) -> dict:
    paths = ensure_streams(cfg.max_n, cfg.data_dir)
    checked, applicable, violations = Counter(), Counter(), Counter()
    samples: dict[str, list] = {}
    graphs = pairs = 0
    for n in range(3, cfg.max_n + 1):
        for line in open(paths[n]):
            G = parse_graph6(line)
            if hamiltonian_oracle(G).found:
                continue
            try:
                reports = audit_graph(G)
            except ValueError:
                continue
            graphs += 1
            for rep in reports:
                pairs += 1
                for item, r in rep.items.items():
                    checked[item] += r.checked
                    applicable[item] += r.applicable
                    violations[item] += len(r.violations)
                    for v in r.violations[: cfg.examples - len(samples.get(item, []))]:
                        samples.setdefault(item, []).append({"g6": line.strip(), **v})
    return {
        "graphs": graphs,
        "pairs": pairs,
        "checked": {k: checked[k] for k in (*ITEMS, ENDPOINT_ITEM)},
        "applicable": {k: applicable[k] for k in (*ITEMS, ENDPOINT_ITEM)},
        "violations": {k: violations[k] for k in (*ITEMS, ENDPOINT_ITEM)},
        "samples": samples,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=AuditConfig.max_n)
    ap.add_argument("--data", type=Path, default=AuditConfig.data_dir)
    args = ap.parse_args(argv)
    print(json.dumps(run(AuditConfig(args.max_n, args.data)), indent=2))


if __name__ == "__main__":
    main()
