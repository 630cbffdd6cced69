"""Survivor primes for omega(p + x^2) <= 2, with class groups and Ono invariants."""

from .arith import DomainError, FactoredInteger, big_omega, factor, is_prime, jacobi, small_omega
from .field import QuadField, TwoSplitting, make_field, split_odd_primes
from .ono import OnoResult, ono_invariant, sasaki_check
from .quadform import (
    ClassGroup,
    QuadraticForm,
    class_group,
    class_number,
    compose,
    form_order,
    is_fundamental,
    reduce,
    reduced_forms,
)
from .survey import (
    SurvivorRecord,
    WitnessEntry,
    check_case_1mod8,
    check_case_3mod8,
    check_case_5mod8,
    check_case_7mod8,
    even_length_partition,
    search_range,
    survivor_predicate,
    witness_2y2,
    witness_8t2,
)

__version__ = "0.1.0"
