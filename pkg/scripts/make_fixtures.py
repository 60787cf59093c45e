#!/usr/bin/env python3
"""Regenerate the JSON workspaces under tests/fixtures/ (deterministic)."""
from pathlib import Path

import numpy as np

from ndgtool.ncx.core import direct_sum, point, staircase
from ndgtool.ndgcat import random_module, regular_bimodule, truncated_polynomial
from ndgtool.random_gen import random_chain_map, random_complex, scramble
from ndgtool.scalars import prime_field
from ndgtool.serialize import Workspace, dumps_workspace

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(2024)

    F = prime_field(7, 3)
    ws = Workspace(F.spec, F)
    (OUT / "field_only.json").write_text(dumps_workspace(ws))

    block = staircase(F, 0, 3)
    X, _ = scramble(direct_sum(F, [staircase(F, -1, 2), staircase(F, 1, 3), point(F, 0)]), rng)
    Y, _ = random_complex(F, rng, lo=-1)
    acyc, _ = random_complex(F, rng, acyclic=True, max_blocks=3, lo=-1)
    ws = Workspace(F.spec, F, complexes={"J": block, "X": X, "Y": Y, "A": acyc},
                   maps={"f": random_chain_map(X, Y, rng), "idJ": block.identity()})
    (OUT / "complexes_n3.json").write_text(dumps_workspace(ws))

    T = truncated_polynomial(F)
    M = random_module(T, rng, max_parts=1)
    R = regular_bimodule(T)
    ws = Workspace(F.spec, F, categories={"T": T}, modules={"M": M, "P": random_module(
        T, rng, max_parts=1)}, bimodules={"R": R})
    (OUT / "category_n3.json").write_text(dumps_workspace(ws))


if __name__ == "__main__":
    main()
