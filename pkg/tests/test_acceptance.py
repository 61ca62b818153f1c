"""Acceptance gate: twelve criteria, one PASS/FAIL line each.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import io
import random
import sys
import time
from pathlib import Path

import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from rcfm.exact import ONE, J  # noqa: E402
from rcfm.fredholm import (  # noqa: E402
    NotFredholmInClass,
    RefutationCertificate,
    banded_inverse_refute,
    cokernel_dim_witnessed,
    cokernel_truncation_profile,
    index,
    kernel_bound,
    kernel_dim,
    matrix_unit_from_ideal,
    toeplitz_fredholm_decide,
    truncation_nullity,
    witness_compose,
    witness_verify,
)
from rcfm.generators import (  # noqa: E402
    random_finite,
    random_hyper,
    random_invertible,
    random_matrix,
    random_witness,
)
from rcfm.matrix import (  # noqa: E402
    FinSuppVector,
    HyperDiagonal,
    T,
    equals,
    identity,
    is_finite,
    mul,
    rank_of_finite,
    scalar_mul,
    shift,
    unit,
    window,
)
from rcfm.tj import (  # noqa: E402
    PHI,
    PSI,
    XI,
    Distinguishable,
    embedding_hom_check,
    equivalence_check,
    index_obstruction,
    injectivity_check,
    random_element,
)

import test_cli  # noqa: E402

I = identity()
RESULTS: dict[int, tuple[bool, str]] = {}


def W(k):
    return witness_verify(shift(k), shift(-k))


def c1():
    t = time.perf_counter()
    bad = [i for i in range(-5, 6) if i and index(W(i)) != -i]
    dt = time.perf_counter() - t
    return not bad and dt < 1, f"failures={bad} time={dt:.2f}s"


def c2():
    rep, basis = kernel_dim(shift(-1), with_basis=True)
    coker = cokernel_dim_witnessed(witness_verify(shift(-1), shift(1))).value
    ok = rep.value == 1 and basis == [FinSuppVector.unit(1)] and coker == 0
    return ok, f"ker={rep.value} coker={coker}"


def c3():
    rng = random.Random(101)
    t = time.perf_counter()
    fails = 0
    for _ in range(200):
        a, b = random_witness(rng), random_witness(rng)
        fails += index(witness_compose("mul", a, b)) != index(a) + index(b)
    dt = time.perf_counter() - t
    return fails == 0 and dt < 30, f"failures={fails}/200 time={dt:.2f}s"


def c4():
    rng = random.Random(102)
    inv = pert = 0
    for _ in range(100):
        w = random_witness(rng)
        inv += index(witness_compose("invert", w)) != -index(w)
        pert += index(witness_compose("perturb", w, random_finite(rng, 12, 5))) != index(w)
    return inv == pert == 0, f"inverse failures={inv}/100 perturbation failures={pert}/100"


def c5():
    rng = random.Random(103)
    fails = 0
    for _ in range(50):
        w = random_witness(rng)
        U, Ui = random_invertible(rng, 4)
        fails += index(witness_verify(U, Ui)) != 0
        h = random_hyper(rng)
        # the conjugator is the product of an elementary/diagonal part and a hyperdiagonal part
        c = witness_compose("conjugate", witness_compose("conjugate", w, U, Ui), h)
        fails += index(c) != index(w)
    return fails == 0, f"failures={fails}/100"


def c6():
    ok = (
        equals(mul(shift(-1), shift(1)), I)
        and equals(mul(shift(1), shift(-1)), I - unit(1, 1))
        and equals(mul(T(-1), T(1)), I)
    )
    return ok, "three symbolic identities"


def c7():
    eq = equivalence_check(PHI, PSI, HyperDiagonal(1, J + ONE))
    ob = index_obstruction(PHI, XI)
    return eq and ob == Distinguishable(1, 2), f"Phi~Psi={eq} Phi/Xi={ob}"


def c8():
    P = I - shift(-1)
    k = kernel_dim(P).value
    prof = cokernel_truncation_profile(P, 10, 40)
    dec = toeplitz_fredholm_decide(P)
    ref = banded_inverse_refute(P, 4, 2, 6)
    ok = (
        k == 0
        and set(prof.values()) == {0}
        and isinstance(dec, NotFredholmInClass)
        and isinstance(ref, RefutationCertificate)
        and ref.rank_coefficients < ref.rank_augmented
    )
    return ok, f"ker={k} profile={set(prof.values())} decide={type(dec).__name__} refute={type(ref).__name__}"


def c9():
    rng = random.Random(104)
    fails = 0
    for _ in range(100):
        F = random_finite(rng, 8, 6)
        n = max(F.patch.row_bound, F.patch.col_bound, 1)
        fails += rank_of_finite(F) != sympy.Matrix(window(F, (1, n), (1, n))).rank()
    for _ in range(50):
        a = random_finite(rng, 10, 4)
        if a.patch.is_zero():
            a = unit(rng.randint(1, 9), rng.randint(1, 9))
        k, l = rng.randint(1, 15), rng.randint(1, 15)
        left, c, right = matrix_unit_from_ideal(a, k, l)
        fails += scalar_mul(c, mul(mul(left, a), right)) != unit(k, l)
    for _ in range(50):
        A, F = random_matrix(rng), random_finite(rng)
        fails += not (is_finite(mul(F, A)) and is_finite(mul(A, F)))
    return fails == 0, f"failures={fails}/200"


def c10():
    rng = random.Random(105)
    kfail = 0
    for _ in range(100):
        A = random_matrix(rng)
        k = kernel_dim(A).value
        M = kernel_bound(A)
        kfail += any(truncation_nullity(A, n) != k for n in range(max(M, 1), M + 11))
    cfail = 0
    for _ in range(50):
        w = random_witness(rng)
        alt = witness_verify(w.a, w.a0 + random_finite(rng))
        cfail += cokernel_dim_witnessed(alt).value != cokernel_dim_witnessed(w).value
    return kfail == cfail == 0, f"kernel failures={kfail}/100 cokernel failures={cfail}/50"


def c11():
    inj = all(injectivity_check(E, D) for E, D in ((PHI, 4), (PSI, 3), (XI, 3)))
    rng = random.Random(106)
    fails = 0
    for E in (PHI, PSI, XI):
        for _ in range(150):
            fails += not embedding_hom_check(E, random_element(rng), random_element(rng))
    return inj and fails == 0, f"injective={inj} hom failures={fails}/450"


def c12():
    bad = []
    for argv, expected in test_cli.DOCUMENTED:
        out = io.StringIO()
        if test_cli.run(["--format", "json", *argv], stream=out) != 0 or out.getvalue() != expected:
            bad.append(argv[0])
    try:
        test_cli.test_round_trip_corpus()
        corpus = True
    except AssertionError:
        corpus = False
    return not bad and corpus, f"invocation mismatches={bad} round-trip={corpus}"


CRITERIA = {n: f for n, f in enumerate((c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12), start=1)}


def evaluate(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (bool(ok), detail)
    return RESULTS[n]


def format_line(n):
    ok, detail = RESULTS[n]
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = evaluate(n)
    print(format_line(n))
    assert ok, detail


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        evaluate(n)
        print(format_line(n))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
