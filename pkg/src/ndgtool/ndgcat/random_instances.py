"""Seeded random categories, modules and bimodules with small hom spaces."""
from __future__ import annotations

from typing import List, Tuple

import numpy as np

from ..random_gen import random_complex, random_invertible
from ..scalars import Field
from .category import NdgCategory, base_category, change_basis, truncated_polynomial, \
    upper_triangular
from .modules import (NdgBimodule, NdgModule, direct_sum_modules, dual_module, free_bimodule,
                      module_as_bimodule, module_functor, regular_bimodule, representable,
                      transport_module)


def random_category(F: Field, rng: np.random.Generator, max_hom_dim: int = 6,
                    scrambled: bool = True) -> NdgCategory:
    """k, a truncated polynomial algebra, or a two-object upper-triangular category."""
    kind = int(rng.integers(0, 4))
    top = int(rng.integers(1, max_hom_dim))       # hom dim top + 1 <= max_hom_dim
    if kind == 0:
        C = base_category(F)
    elif kind == 1:
        C = truncated_polynomial(F, top)
    elif kind == 2:
        C = upper_triangular(F, truncated_polynomial(F, top))
    else:
        V, _ = random_complex(F, rng, max_blocks=2, span=3, lo=0)
        while V.space.total_dim() == 0 or V.space.total_dim() > max_hom_dim:
            V, _ = random_complex(F, rng, max_blocks=2, span=3, lo=0)
        C = upper_triangular(F, base_category(F), V)
    if not scrambled:
        return C
    g = {}
    for key, H in C.hom.items():
        g[key] = {i: random_invertible(F, n, rng) for i, n in H.dims.items()}
    return change_basis(C, g)


def random_module(C: NdgCategory, rng: np.random.Generator, max_parts: int = 2,
                  scrambled: bool = True) -> NdgModule:
    """Scrambled direct sum of functor images of representables and duals."""
    N = C.field.N
    parts = []
    for _ in range(int(rng.integers(1, max_parts + 1))):
        A = C.objects[int(rng.integers(0, len(C.objects)))]
        kind = int(rng.integers(0, 5))
        rep = representable(C, A, "right")
        if kind == 0:
            X = rep
        elif kind == 1:
            X = module_functor(rep, "theta", int(rng.integers(-2, 3)))
        elif kind == 2:
            X = module_functor(rep, "q", int(rng.integers(0, N)))
        elif kind == 3:
            X = module_functor(rep, "suspend" if rng.integers(0, 2) else "desuspend")
        else:
            X = dual_module(representable(C, A, "left"))
        parts.append(X)
    X = parts[0] if len(parts) == 1 else direct_sum_modules(parts)
    if not scrambled:
        return X
    g = {A: {i: random_invertible(C.field, n, rng) for i, n in X.at(A).dims.items()}
         for A in C.objects}
    return transport_module(X, g)


def random_bimodule_instance(F: Field, rng: np.random.Generator, max_hom_dim: int = 6
                             ) -> Tuple[NdgModule, NdgBimodule, NdgModule]:
    """(X over B, M a B-A-bimodule, Y over A) for the tensor-hom adjunction."""
    kind = int(rng.integers(0, 3))
    C = random_category(F, rng, max_hom_dim)
    if kind == 0:
        M = regular_bimodule(C)
        B = A = C
    elif kind == 1:
        b0 = C.objects[int(rng.integers(0, len(C.objects)))]
        a0 = C.objects[int(rng.integers(0, len(C.objects)))]
        M = free_bimodule(C, C, b0, a0)
        B = A = C
    else:
        k = base_category(F)
        M = module_as_bimodule(random_module(C, rng, max_parts=1), k)
        B, A = k, C
    X = random_module(B, rng, max_parts=1)
    Y = random_module(A, rng, max_parts=1)
    return X, M, Y


def object_choice(C: NdgCategory, rng: np.random.Generator):
    return C.objects[int(rng.integers(0, len(C.objects)))]


__all__: List[str] = ["random_category", "random_module", "random_bimodule_instance",
                      "object_choice"]
