"""Mealy transducer algebra and exact growth analytics for the three-state
mask/successor family over an m-symbol alphabet."""

from .machine import (
    GuardExceeded,
    MealyMachine,
    find_similarity,
    format_machine,
    identity_machine,
    is_invertible,
    is_similar,
    minimize,
    minimized_power,
    parse_machine,
    product,
    relabel,
    states_equivalent,
)
from .growth import (
    Element,
    GrowthTable,
    automaton_growth,
    ball_growth,
    canonical_element,
    compose,
    compose_state,
    distinguishing_word,
    identity_element,
    spherical_growth,
    word_growth,
)
from .family import (
    F0,
    F1,
    CayleyBall,
    CayleyBlock,
    GeneratorWord,
    NormalForm,
    absorption_relation,
    carry_relation,
    cayley_ball,
    cayley_block,
    enumerate_normal_forms,
    has_rule_occurrence,
    ladder_word,
    loop_free_path_words,
    low_term,
    mask_successor_machine,
    parse_word,
    prefix_relation,
    reduce_word,
    restrict_normal_form,
    restriction_word,
    shifted_mask_successor_machine,
    successor_power_machine,
    valuation,
    word_element,
    word_from_letters,
    word_problem,
)
from .madic import MadicCodec, act_on_integer, madic_and
from .series import (
    DifferenceTable,
    SeriesCoefficients,
    ball_growth_recurrence,
    ball_growth_series,
    check_ball_word_identity,
    companion_recurrence,
    finite_difference,
    growth_exponent_diagnostic,
    linear_limit_growth,
    mahler_bracket,
    mahler_functional_estimate,
    mahler_pointwise_estimate,
    multisection_identity_check,
    quadratic_limit_growth,
    second_difference_repetition_check,
    second_difference_values,
    sequential_power_partitions,
    series_coefficients,
    word_growth_at,
    word_growth_recurrence,
    word_growth_series,
    word_growth_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
