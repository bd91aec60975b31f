//! Reference tables for the seven-family classification.
//!
//! These are verbatim transcriptions of the published classification's Ricci
//! tables and collineation-system displays, in the canonical polynomial text
//! accepted by [`crate::multipoly::Polynomial::parse`]. The verification
//! engine compares them against the values this crate derives from first
//! principles and reports every discrepancy; the tables themselves are never
//! used to compute anything.
//!
//! Row order everywhere is the symmetric pair order
//! `(1,1), (1,2), (1,3), (2,2), (2,3), (3,3)`; system columns are the
//! coefficients of `λ1, λ2, λ3` (the `λ` column is definitionally
//! `−2 g(e_i, e_j)` and is not tabulated).

use crate::families::Family;

/// Reference Ricci table of a family, if the source states one in closed
/// form. The third family's table is stated in terms of auxiliary quantities
/// that are never defined, so only structural facts (vanishing
/// off-diagonals) can be checked for it.
pub fn reference_ricci(family: Family) -> Option<[&'static str; 6]> {
    match family {
        Family::G1 => Some([
            "-beta^2/2",
            "-alpha*beta",
            "alpha*beta",
            "-2*alpha^2 - beta^2/2",
            "2*alpha^2",
            "-2*alpha^2 + beta^2/2",
        ]),
        Family::G2 => Some([
            "-alpha^2/2 - 2*gamma^2",
            "0",
            "0",
            "alpha^2/2 - alpha*beta",
            "-alpha*gamma + 2*beta*gamma",
            "-alpha^2/2 + alpha*beta",
        ]),
        Family::G3 => None,
        Family::G4 => Some([
            "-alpha^2/2",
            "0",
            "0",
            "alpha^2/2 - alpha*beta + 2*alpha*eta - 2*beta*eta + 2",
            "alpha - beta + 2*eta",
            "-alpha^2/2 + alpha*beta - 2*beta*eta + 2",
        ]),
        Family::G5 => Some([
            "alpha^2 + alpha*delta + beta^2/2 - gamma^2/2",
            "0",
            "0",
            "alpha*delta - beta^2/2 + delta^2 + gamma^2/2",
            "0",
            "-alpha^2 - beta^2/2 - beta*gamma - delta^2 - gamma^2/2",
        ]),
        Family::G6 => Some([
            "-alpha^2 + beta^2/2 - beta*gamma - delta^2 + gamma^2/2",
            "0",
            "0",
            "-alpha^2 - alpha*delta + beta^2/2 - gamma^2/2",
            "0",
            "alpha*delta + beta^2/2 + delta^2 - gamma^2/2",
        ]),
        Family::G7 => Some([
            "-gamma^2/2",
            "0",
            "0",
            "-alpha^2 + alpha*delta - beta*gamma - gamma^2/2",
            "alpha^2 - alpha*delta + beta*gamma",
            "-alpha^2 + alpha*delta - beta*gamma - gamma^2/2",
        ]),
    }
}

/// Reference collineation-system display of a family: `λ1, λ2, λ3`
/// coefficient columns for the six pair rows.
pub fn reference_system(family: Family) -> [[&'static str; 3]; 6] {
    match family {
        Family::G1 => [
            ["0", "-3*alpha*beta^2", "3*alpha*beta^2"],
            ["3*alpha*beta^2/2", "-3*alpha^2*beta", "3*alpha^2*beta"],
            ["-3*alpha*beta^2/2", "3*alpha^2*beta", "alpha^2*beta"],
            ["6*alpha^2*beta", "0", "-3*alpha*beta^2"],
            ["-6*alpha^2*beta", "3*alpha*beta^2/2", "3*alpha*beta^2/2"],
            ["6*alpha^2*beta", "-3*alpha*beta^2", "0"],
        ],
        Family::G2 => [
            ["0", "0", "0"],
            [
                "0",
                "alpha^2*gamma/2 - 2*beta^2*gamma",
                "-alpha^3/2 - alpha^2*beta/2 + alpha*beta^2 - alpha*gamma^2 - 2*beta*gamma^2",
            ],
            [
                "0",
                "alpha^3/2 + alpha^2*beta/2 - alpha*beta^2 + alpha*gamma^2 + 2*beta*gamma^2",
                "alpha^2*gamma/2 - 2*beta^2*gamma",
            ],
            ["-alpha^2*gamma + 4*beta^2*gamma", "0", "0"],
            ["0", "0", "0"],
            ["-alpha^2*gamma + 4*beta^2*gamma", "0", "0"],
        ],
        Family::G3 => [
            ["0", "0", "0"],
            [
                "0",
                "0",
                "-alpha^3 - alpha^2*beta + alpha*beta^2 + alpha*gamma^2 + beta^3 - beta*gamma^2",
            ],
            [
                "0",
                "-alpha^3 - alpha^2*gamma + alpha*beta^2 + alpha*gamma^2 - beta^2*gamma + gamma^3",
                "0",
            ],
            ["0", "0", "0"],
            [
                "alpha^2*beta - alpha^2*gamma - beta^3 - beta^2*gamma + beta*gamma^2 + gamma^3",
                "0",
                "0",
            ],
            ["0", "0", "0"],
        ],
        Family::G4 => [
            ["0", "0", "0"],
            [
                "0",
                "-alpha^2/2 + beta^2 - 2*beta*eta + 2",
                "-alpha^3/2 - alpha^2*beta/2 + alpha*beta^2 - 2*alpha*beta*eta + 2*beta^2*eta + alpha - 3*beta + 2*eta",
            ],
            [
                "0",
                "alpha^3/2 + alpha^2*beta/2 - alpha^2*eta - alpha*beta^2 + 2*alpha*beta*eta + 2*beta^2*eta - alpha - 5*beta + 2*eta",
                "-alpha^2/2 + beta^2 - 4*beta*eta + 2",
            ],
            ["alpha^2 - 2*beta^2 + 4*beta*eta + 4", "0", "0"],
            ["alpha^2*eta - 4*beta^2*eta + 8*beta*eta^2 - 4*eta^3", "0", "0"],
            ["alpha^2 - 2*beta^2 + 8*beta*eta - 4", "0", "0"],
        ],
        Family::G5 => [
            [
                "0",
                "0",
                "2*alpha^3 + 2*alpha^2*delta + alpha*beta^2 - alpha*gamma^2",
            ],
            [
                "0",
                "0",
                "alpha^2*gamma + alpha*beta*delta + alpha*delta*gamma - beta^3/2 + beta^2*gamma/2 + beta*delta^2 + beta*gamma^2/2 - gamma^3/2",
            ],
            [
                "-alpha^3 - alpha^2*delta - alpha*beta^2/2 + alpha*gamma^2/2",
                "-alpha^2*gamma - alpha*delta*gamma - beta^2*gamma/2 + gamma^3/2",
                "0",
            ],
            [
                "0",
                "0",
                "2*alpha*delta^2 - beta^2*delta + 2*delta^3 + delta*gamma^2",
            ],
            [
                "-alpha*beta*delta + beta^3/2 - beta*delta^2 - beta*gamma^2/2",
                "-alpha*delta^2 + beta^2*delta/2 - delta^3 - delta*gamma^2/2",
                "0",
            ],
            ["0", "0", "0"],
        ],
        Family::G6 => [
            ["0", "0", "0"],
            [
                "0",
                "-alpha^3 - alpha^2*delta + alpha*beta^2/2 - alpha*gamma^2/2",
                "-alpha^2*gamma - alpha*delta*gamma + beta^2*gamma/2 - gamma^3/2",
            ],
            [
                "0",
                "alpha*beta*delta + beta^3/2 + beta*delta^2 - beta*gamma^2/2",
                "alpha*delta^2 + beta^2*delta/2 + delta^3 - delta*gamma^2/2",
            ],
            [
                "2*alpha^3 + 2*alpha^2*delta - alpha*beta^2 + alpha*gamma^2",
                "0",
                "0",
            ],
            [
                "alpha^2*gamma - alpha*beta*delta + alpha*delta*gamma - beta^3/2 - beta^2*gamma/2 - beta*delta^2 + beta*gamma^2/2 + gamma^3/2",
                "0",
                "0",
            ],
            [
                "-2*alpha*delta^2 - beta^2*delta - 2*delta^3 + delta*gamma^2",
                "0",
                "0",
            ],
        ],
        Family::G7 => [
            ["0", "0", "0"],
            ["0", "-beta*gamma^2/2", "beta*gamma^2/2 - gamma^3/2"],
            ["0", "beta*gamma^2/2 + gamma^3/2", "-beta*gamma^2/2"],
            ["beta*gamma^2", "0", "delta*gamma^2"],
            ["-beta*gamma^2", "-delta*gamma^2/2", "-delta*gamma^2/2"],
            ["beta*gamma^2", "delta*gamma^2", "0"],
        ],
    }
}
