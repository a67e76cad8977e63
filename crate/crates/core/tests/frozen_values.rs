//! Brackets on fixed inputs, frozen from the independent oracle in
//! `tests/oracle/dorfman.py` (multilinear forms, coordinate-free d and L).

use courant_core::courant::{CourantElement, CourantStructure};
use courant_core::symcore::{parse_form, parse_poly, Form};
use courant_core::transgression::{DerivedCourant, TauAlgebroid};

struct Case {
    n: usize,
    k: usize,
    potential: &'static str,
    xi: [&'static str; 4],
    alpha: &'static str,
    eta: [&'static str; 4],
    beta: &'static str,
    // Oracle output.
    twist: &'static str,
    form: &'static str,
    field: [&'static str; 4],
    pairing: &'static str,
}

const CASES: [Case; 2] = [
    Case {
        n: 3,
        k: 1,
        potential: "x*z dx^dy",
        xi: ["y", "0", "x*z", ""],
        alpha: "z dx + x^2 dy",
        eta: ["-x", "z", "0", ""],
        beta: "x*y dz",
        twist: "x dx^dy^dz",
        form: "(-x^2*z^2 + x*y*z + 2*x*z) dx + (-x^3*z + 2*x^2) dy + (x^2*y + x*y*z - x + y^2) dz",
        field: ["-y - z", "x*z", "x*z", ""],
        pairing: "x^2*y*z + x^2*z - x*z",
    },
    Case {
        n: 4,
        k: 2,
        potential: "w*y dx^dy^dz",
        xi: ["w", "0", "x", "0"],
        alpha: "y dx^dw + x*z dy^dz",
        eta: ["0", "y", "0", "z"],
        beta: "w dx^dy",
        twist: "-y dx^dy^dz^dw",
        form: "(-x*y*z + z) dx^dy + (y*z) dx^dz + (x*y^2 - y) dx^dw + (-w*y*z) dy^dz + (-w) dy^dw + (-w*y^2) dz^dw",
        field: ["-z", "0", "0", "x"],
        pairing: "(-y*z) dx + (w^2) dy + (x*y*z) dz",
    },
];

fn element(n: usize, form: &str, field: &[&str; 4]) -> CourantElement {
    let fiber = field[..n].iter().map(|p| parse_poly(n, p).unwrap()).collect();
    CourantElement::new(parse_form(n, form).unwrap(), fiber)
}

fn form(n: usize, s: &str) -> Form {
    parse_form(n, s).unwrap()
}

#[test]
fn dorfman_bracket_matches_the_oracle() {
    for c in &CASES {
        let q = CourantStructure::twisted(c.n, c.k, form(c.n, c.potential)).unwrap();
        assert_eq!(q.twist().unwrap(), &form(c.n, c.twist));
        let (a, b) = (element(c.n, c.alpha, &c.xi), element(c.n, c.beta, &c.eta));
        assert_eq!(q.dorfman(&a, &b), element(c.n, c.form, &c.field), "n={} k={}", c.n, c.k);
        assert_eq!(q.pairing(&a, &b), form(c.n, c.pairing));
    }
}

#[test]
fn transgression_recovers_the_oracle_values() {
    for c in &CASES {
        let q = CourantStructure::twisted(c.n, c.k, form(c.n, c.potential)).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let cour = DerivedCourant::new(&tau).unwrap();
        let (a, b) = (tau.phi(&element(c.n, c.alpha, &c.xi)), tau.phi(&element(c.n, c.beta, &c.eta)));
        let br = tau.to_courant(&cour.bracket(&a, &b).unwrap()).unwrap();
        assert_eq!(br, element(c.n, c.form, &c.field));
        assert_eq!(cour.pairing(&a, &b).unwrap(), form(c.n, c.pairing));
    }
}
