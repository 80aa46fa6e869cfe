"""Smooth spectral statistics of hyperbolic surfaces.

Large-genus Weil-Petersson limits of windowed eigenvalue statistics, the
Dyson-Mehta GOE reference variance, and the trace-formula decomposition.
"""

from ._core import (  # noqa: F401
    DecayRow,
    DecayStudy,
    EigenvalueList,
    GOEMCResult,
    IfBreakdown,
    KernelParams,
    LengthSpectrum,
    TestFunctionPair,
    VarianceBreakdown,
    __version__,
    cli_main,
    decay_study_if,
    eval_F,
    eval_GL,
    eval_HL,
    expectation_sns_finite_g,
    fixture_version,
    i_f,
    i_f_components,
    i_l_pair,
    limiting_variance,
    min_nonsimple_geodesic_length,
    n_osc_from_spectrum,
    read_eigenvalue_list,
    read_length_spectrum,
    sample_goe_variance,
    sigma2_goe_closed_form,
    sinh_ratio_bound_check,
    sinh_weight,
    statistic_from_eigenvalues,
    unfolded_spectrum,
    variance_tau0,
    weyl_main_term,
    write_length_spectrum,
)
