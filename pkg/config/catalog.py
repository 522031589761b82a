"""
Static catalog tables: bound identifiers and citations, selection aliases,
ensemble kinds, and the worked-example fixture.
Bound names are a stable public contract; do not rename entries.
"""

# name -> citation and the exact quantity each bound is compared against
BOUNDS = {
    "eq1.1": {
        "citation": "Eq (1.1)",
        "quantity": "variance vs (M-m)^2/4",
        "requires": "hermitian",
    },
    "eq1.4-lower": {
        "citation": "Eq (1.4), left inequality",
        "quantity": "||A-B||",
        "requires": "hermitian pair",
    },
    "eq1.4-upper": {
        "citation": "Eq (1.4), right inequality",
        "quantity": "||A-B||",
        "requires": "hermitian pair",
    },
    "thm2.1": {
        "citation": "Thm 2.1, Eq (2.1); Cor 2.1, Eq (2.3)",
        "quantity": "s(W(A),W(B))",
        "requires": "any",
    },
    "eq2.7": {
        "citation": "Eq (2.7)",
        "quantity": "s(W(A),W(B))",
        "requires": "any",
    },
    "eq2.8": {
        "citation": "Eq (2.8)",
        "quantity": "max|lambda_i(A) - lambda_j(D)|",
        "requires": "any",
    },
    "thm2.2": {
        "citation": "Thm 2.2, Eq (2.4)",
        "quantity": "||Eig_down(A) - Eig_up(B)||",
        "requires": "hermitian pair",
    },
    "eq2.5": {
        "citation": "Eq (2.5); Eq (2.6) at B = A",
        "quantity": "||Eig_down(A) - Eig_up(B)||",
        "requires": "hermitian pair",
    },
    "eq2.9": {
        "citation": "Cor 2.2, Eq (2.9)",
        "quantity": "||Eig_down(A) - Eig_up(B)||",
        "requires": "hermitian pair",
    },
    "eq2.9-diag": {
        "citation": "Cor 2.2, Eq (2.9) with B = D",
        "quantity": "||Eig_down(A) - Eig_up(D)||",
        "requires": "hermitian",
    },
    "eq2.10": {
        "citation": "Cor 2.3, Eq (2.10)",
        "quantity": "s(W(A),W(B))",
        "requires": "any",
    },
    "eq2.11": {
        "citation": "Cor 2.4, Eq (2.11)",
        "quantity": "s(W(A),W(B))",
        "requires": "any",
    },
    "eq2.12": {
        "citation": "Cor 2.5, Eq (2.12)",
        "quantity": "s(W(A),W(B))",
        "requires": "any",
    },
    "cor2.5-mean": {
        "citation": "Section 2, closing display",
        "quantity": "max|lambda_i(A) - lambda_j(D)|",
        "requires": "any",
    },
    "cor2.1-reim": {
        "citation": "Cor 2.1, Hermitian/skew split",
        "quantity": "max|lambda_i(H) - lambda_j(K)|",
        "requires": "any",
    },
    "cor2.1-split": {
        "citation": "Cor 2.1, A = D + N split",
        "quantity": "max|lambda_i(A) - lambda_j(N)|",
        "requires": "normal A and N",
    },
    "thm3.1": {
        "citation": "Thm 3.1, Eq (3.1)",
        "quantity": "spd(A)",
        "requires": "normal",
    },
    "eq3.4": {
        "citation": "Eq (3.4)",
        "quantity": "spd(A)",
        "requires": "normal",
    },
    "thm3.2": {
        "citation": "Thm 3.2, Eq (3.5)",
        "quantity": "spd(A)",
        "requires": "normal",
    },
    "eq3.7-lower": {
        "citation": "Thm 3.3, Eq (3.7), left inequality",
        "quantity": "lambda_min(det(A)^(-1/n) Phi(A))",
        "requires": "positive definite",
    },
    "eq3.7-upper": {
        "citation": "Thm 3.3, Eq (3.7), right inequality",
        "quantity": "lambda_max(det(A)^(-1/n) Phi(A))",
        "requires": "positive definite",
    },
    "eq3.7-cond": {
        "citation": "Thm 3.3, Eq (3.7), inverted",
        "quantity": "M/m",
        "requires": "positive definite",
    },
    "eq3.10": {
        "citation": "Eq (3.10)",
        "quantity": "(M - Phi(A))(Phi(A) - m) - (Phi(A^2) - Phi(A)^2)",
        "requires": "hermitian",
    },
    "thm3.4": {
        "citation": "Thm 3.4, Eq (3.11)",
        "quantity": "(M - m) Phi(A) - Phi(A^2)",
        "requires": "psd",
    },
    "eq3.15": {
        "citation": "Cor 3.1, Eq (3.15)",
        "quantity": "spd(A)",
        "requires": "psd",
    },
}

# Selection keys accepted by --bounds; each expands to one registry entry
SELECTION_ALIASES = {
    "eq1.4": "eq1.4",
    "weyl": "eq1.4",
    "eq2.1": "thm2.1",
    "eq2.3": "thm2.1",
    "cor2.1": "thm2.1",
    "eq2.4": "thm2.2",
    "eq2.6": "eq2.5",
    "cor2.2": "eq2.9",
    "cor2.3": "eq2.10",
    "cor2.4": "eq2.11",
    "cor2.5": "eq2.12",
    "eq3.1": "thm3.1",
    "eq3.5": "thm3.2",
    "thm3.3": "eq3.7",
    "eq3.11": "thm3.4",
    "cor3.1": "eq3.15",
}

ENSEMBLE_KINDS = [
    "hermitian_gaussian",
    "normal_unitary_conjugated",
    "psd",
    "circulant",
]

# Worked example of the spread section
WORKED_EXAMPLE_MATRIX = [
    [2, 2, 1],
    [2, 2, 1],
    [1, 1, 1],
]

WORKED_EXAMPLE_SQUARE = [
    [9, 9, 5],
    [9, 9, 5],
    [5, 5, 3],
]

# Printed values (4 decimals) and the tolerance they are checked to
WORKED_EXAMPLE_VALUES = {
    "variance_spread_lower": 4.4721,
    "refined_spread_lower": 4.5,
    "oracle_spread": 4.5616,
}
WORKED_EXAMPLE_TOLERANCE = 1e-3

# Result names that share one registry runner
SELECTION_ALIASES.update({
    "eq1.4-lower": "eq1.4",
    "eq1.4-upper": "eq1.4",
    "eq3.7-lower": "eq3.7",
    "eq3.7-upper": "eq3.7",
    "eq3.7-cond": "eq3.7",
})
