"""N-complexes over the base field."""
from .core import (GradedMap, GradedSpace, HomologySlice, NComplex, boundaries,
                   check_nilpotent, cycles, d_power, direct_sum, homology, homology_table,
                   is_acyclic, point, staircase, validate_ncomplex, zero_complex)
from .tensor import (associator, braiding_iso, hom_blocks, hom_complex, map_to_vector,
                     tensor_blocks, tensor_complex, tensor_many, tensor_maps, vector_to_map)
from .functors import (adjunction_maps, canonical_maps, desuspend, q_functor, q_functor_map,
                       q_layout, suspend, suspend_layout, suspend_map, theta_map,
                       theta_shift, u_functor)
from .homotopy import (apply_homotopy, chain_condition_operator, induced_rank,
                       is_null_homotopic, is_quasi_iso, khom_dim, khom_dim_direct,
                       null_homotopy, nullhomotopy_operator)
from .triangles import (ExactnessEntry, Triangle, cokernel, cone, connecting_matrix,
                        exactness_at, hexagon_report, split_data)
from .contraction import Contraction, contract_acyclic
