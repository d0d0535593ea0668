//! Built-in reference checks.
//!
//! These re-derive, with the library's own machinery, a set of published
//! reference values for the probe characteristic polynomial and the
//! power-block signature table, comparing with exact rational equality.
//! The CLI exposes them as `bezroot verify paper-examples`.

use serde::Serialize;

use crate::family::{power_block_inertia, probe_charpoly};
use crate::poly::UniPoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckRecord {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        CheckRecord {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

/// Coefficients of the probe characteristic polynomial for `(s, n) =
/// (7, 10)`: outer index is the power of `x` (ascending), inner arrays are
/// coefficients in the symbolic parameter (ascending).
const PHI_7_10: &[&[&str]] = &[
    &["2470629/10", "0", "0", "0", "0", "0", "0", "69984/5"],
    &[
        "-117649",
        "-151263/5",
        "21609/5",
        "-111132/5",
        "15876/5",
        "-81648/5",
        "11664/5",
        "-34992/5",
    ],
    &[
        "-151263/10",
        "14406",
        "-95697/10",
        "50274/5",
        "-21546/5",
        "34992/5",
        "-5832/5",
    ],
    &["7203", "6174/5", "16758/5", "5859/5", "5832/5", "1944/5"],
    &["3087/10", "-588", "1197/5", "-2106/5", "324/5"],
    &["-147", "-63/5", "-351/5", "-27/5"],
    &["-21/10", "6", "-9/10"],
    &["1"],
];

/// Same for `(s, n) = (8, 12)`.
const PHI_8_12: &[&[&str]] = &[
    &["16777216/3", "0", "0", "0", "0", "0", "0", "0", "-823543/3"],
    &[
        "-4194304/3",
        "0",
        "1835008/3",
        "0",
        "1404928/3",
        "0",
        "1075648/3",
        "0",
        "1294139/12",
    ],
    &[
        "-524288",
        "0",
        "-1064960/3",
        "0",
        "-213248",
        "0",
        "-355348/3",
    ],
    &["65536", "0", "31744/3", "0", "-22736/3", "0", "-26411/4"],
    &["16384", "0", "45824/3", "0", "22736/3"],
    &["-1024", "0", "-256", "0", "539/4"],
    &["-640/3", "0", "-152"],
    &["16/3", "0", "-11/12"],
    &["1"],
];

fn poly_from_table(table: &[&[&str]]) -> UniPoly<UniPoly<Rational>> {
    UniPoly::new(
        table
            .iter()
            .map(|coeffs| {
                UniPoly::new(
                    coeffs
                        .iter()
                        .map(|c| c.parse::<Rational>().unwrap())
                        .collect(),
                )
            })
            .collect(),
    )
}

fn phi_check(name: &str, s: usize, n: usize, table: &[&[&str]]) -> CheckRecord {
    let expected = poly_from_table(table);
    let computed = match probe_charpoly(s, n) {
        Ok(phi) => phi,
        Err(e) => return CheckRecord::new(name, false, format!("construction failed: {e}")),
    };
    if computed == expected {
        return CheckRecord::new(
            name,
            true,
            format!("all {} coefficients match exactly", s + 1),
        );
    }
    let mismatch = (0..=s)
        .find(|&k| computed.coeff(k) != expected.coeff(k))
        .expect("some coefficient differs");
    CheckRecord::new(
        name,
        false,
        format!(
            "coefficient of x^{mismatch} differs: computed {:?}, expected {:?}",
            computed.coeff(mismatch),
            expected.coeff(mismatch)
        ),
    )
}

fn power_block_table_check() -> CheckRecord {
    let xis: [Rational; 2] = ["1".parse().unwrap(), "7".parse().unwrap()];
    let coeffs: [Rational; 2] = ["1".parse().unwrap(), "-1".parse().unwrap()];
    let mut checked = 0;
    for d in 1..=8usize {
        for r_s in &coeffs {
            for xi in &xis {
                let expected: i64 = if d % 2 == 1 {
                    1
                } else if r_s.is_positive() {
                    0
                } else {
                    2
                };
                match power_block_inertia(d + 1, 1, r_s, xi) {
                    Ok(inertia) if inertia.signature() == expected => checked += 1,
                    Ok(inertia) => {
                        return CheckRecord::new(
                            "power-block-signature-table",
                            false,
                            format!(
                                "n-s={d}, r_s={r_s}, xi={xi}: signature {} != {expected}",
                                inertia.signature()
                            ),
                        )
                    }
                    Err(e) => {
                        return CheckRecord::new(
                            "power-block-signature-table",
                            false,
                            format!("n-s={d}, r_s={r_s}, xi={xi}: {e}"),
                        )
                    }
                }
            }
        }
    }
    CheckRecord::new(
        "power-block-signature-table",
        true,
        format!("{checked} (order, sign, point) combinations match 1/0/2"),
    )
}

fn quadratic_phi_check() -> CheckRecord {
    for n in 3..=8usize {
        let phi = match probe_charpoly(2, n) {
            Ok(phi) => phi,
            Err(e) => {
                return CheckRecord::new(
                    "probe-quadratic-closed-form",
                    false,
                    format!("n={n}: {e}"),
                )
            }
        };
        let nq = Rational::from_integer(n as i64);
        let four = Rational::from_integer(4);
        let eight = Rational::from_integer(8);
        // x^2 - ((n-1)c^2 - 4)/n x + ((n-2)c^2 - 4n + 8)/n
        let x1 = UniPoly::new(vec![
            four.clone() / nq.clone(),
            Rational::zero(),
            -(Rational::from_integer((n - 1) as i64) / nq.clone()),
        ]);
        let x0 = UniPoly::new(vec![
            (eight - four * nq.clone()) / nq.clone(),
            Rational::zero(),
            Rational::from_integer((n - 2) as i64) / nq.clone(),
        ]);
        let expected = UniPoly::new(vec![x0, x1, UniPoly::one()]);
        if phi != expected {
            return CheckRecord::new(
                "probe-quadratic-closed-form",
                false,
                format!("n={n}: computed {phi:?}, expected {expected:?}"),
            );
        }
    }
    CheckRecord::new(
        "probe-quadratic-closed-form",
        true,
        "closed form reproduced for n = 3..=8".to_string(),
    )
}

/// Runs every built-in reference check and reports one record per check.
pub fn reference_example_checks() -> Vec<CheckRecord> {
    vec![
        phi_check("probe-charpoly-(7,10)", 7, 10, PHI_7_10),
        phi_check("probe-charpoly-(8,12)", 8, 12, PHI_8_12),
        power_block_table_check(),
        quadratic_phi_check(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_reference_checks_pass() {
        let records = reference_example_checks();
        assert_eq!(records.len(), 4);
        for r in &records {
            assert!(r.pass, "{}: {}", r.name, r.detail);
        }
    }
}
