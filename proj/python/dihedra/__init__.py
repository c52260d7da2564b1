"""Class groups of imaginary quadratic orders, dihedral traces and density experiments."""

from ._dihedra import (
    AbelianGroup,
    ClassNumberTable,
    QuadForm,
    ResourceLimit,
    aut_order,
    batch_class_numbers,
    class_group,
    class_order_census,
    compose,
    dihedral_traces,
    eigen_coefficients,
    empirical_cl_comparison,
    exponent3_scan,
    find_witness,
    has_cyclic_quotient,
    is_fundamental,
    is_p_suitable,
    landau_count,
    pgroup_density,
    power,
    predicted_divisibility,
    prime_lower_bound,
    principal_form,
    reduce,
    reduced_forms,
    squarefree_density_3mod4,
    suitable_divisor_density,
    weight,
    weighted_sum_coprime,
)

__all__ = [name for name in dir() if not name.startswith("_")]
