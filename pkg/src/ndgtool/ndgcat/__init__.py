"""Finite N_qDG categories, their modules and bimodules."""
from .category import (NdgCategory, base_category, change_basis, truncated_polynomial,
                       upper_triangular, validate_category)
from .modules import (ActionMatrix, NdgBimodule, NdgModule, action_matrix_product,
                      direct_sum_modules, dual_module, free_bimodule, module_as_bimodule,
                      module_functor, module_on_k, regular_bimodule, representable,
                      transport_module, validate_bimodule, validate_module)
from .homs import (IsoReport, ModuleHomComplex, adjunction_check, hom_over_category,
                   khom_module, khom_via_dual, module_hom_complex, tensor_over_category,
                   tensor_representable_check, tensor_shift_check, yoneda_check)
from .checks import (action_matrix_failures, leibniz_powers_failures, module_map_failures,
                     sigma_theta_same, split_sequence_report)
from .random_instances import (object_choice, random_bimodule_instance, random_category,
                               random_module)
