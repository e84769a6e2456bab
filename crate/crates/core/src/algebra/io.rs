//! The `.alg` text format.
//!
//! ```text
//! algebra a_prime
//! elements 0 a 1
//! leq 0 a
//! leq a 1
//! tilde_one 0
//! end
//! ```

use thiserror::Error;

use super::lattice::{Elem, FiniteLattice, LatticeError};
use super::{Algebra, AlgebraError, HeytingAlgebra, KimAlgebra};
use crate::text::{content_lines, expect_end, expect_keyword, FormatError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraFileError {
    #[error(transparent)]
    Syntax(#[from] FormatError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub heyting: HeytingAlgebra,
    pub tilde_one: Option<Elem>,
}

impl AlgebraFile {
    /// The ccpBa described by the file; fails if `tilde_one` is absent or not `!!`-fixed.
    pub fn ccpba(&self) -> Result<Algebra, AlgebraError> {
        let t = self.tilde_one.ok_or_else(|| AlgebraError::UnknownElement("tilde_one".into()))?;
        Algebra::new(self.heyting.clone(), t)
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, AlgebraFileError> {
    let lines = content_lines(text);
    let first = *lines.first().ok_or_else(|| FormatError::new(1, "empty file"))?;
    let header = expect_keyword(first, "algebra")?;
    let [name] = header[..] else {
        return Err(FormatError::new(first.0, "expected `algebra <name>`").into());
    };
    let second = *lines.get(1).ok_or_else(|| FormatError::new(first.0, "missing `elements`"))?;
    let elements = expect_keyword(second, "elements")?;
    if elements.is_empty() {
        return Err(FormatError::new(second.0, "no elements").into());
    }
    let mut pairs = Vec::new();
    let mut tilde_one = None;
    let mut at = 2;
    while let Some(&(n, line)) = lines.get(at) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[..] {
            ["leq", a, b] => {
                for e in [a, b] {
                    if !elements.contains(&e) {
                        return Err(FormatError::new(n, format!("unknown element `{e}`")).into());
                    }
                }
                pairs.push((a, b));
            }
            ["tilde_one", e] => {
                if tilde_one.is_some() {
                    return Err(FormatError::new(n, "duplicate `tilde_one`").into());
                }
                if !elements.contains(&e) {
                    return Err(FormatError::new(n, format!("unknown element `{e}`")).into());
                }
                tilde_one = Some(e);
            }
            ["end"] => break,
            _ => return Err(FormatError::new(n, format!("unexpected `{line}`")).into()),
        }
        at += 1;
    }
    expect_end(&lines, at)?;
    let lattice = FiniteLattice::build(&elements, &pairs)?;
    let tilde_one = tilde_one.map(|t| lattice.index(t).expect("checked above"));
    let heyting = HeytingAlgebra::derive(lattice)?;
    Ok(AlgebraFile { name: name.to_string(), heyting, tilde_one })
}

/// Writes the lattice (covering pairs only) and optional `~1`.
pub fn write_algebra(
    name: &str,
    lattice: &FiniteLattice,
    tilde_one: Option<Elem>,
    comments: &[String],
) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("algebra {name}\n"));
    out.push_str(&format!("elements {}\n", lattice.names().join(" ")));
    for (a, b) in lattice.covers() {
        out.push_str(&format!("leq {} {}\n", lattice.name(a), lattice.name(b)));
    }
    if let Some(t) = tilde_one {
        out.push_str(&format!("tilde_one {}\n", lattice.name(t)));
    }
    out.push_str("end\n");
    out
}

pub fn write_ccpba(name: &str, alg: &Algebra) -> String {
    write_algebra(name, alg.lattice(), Some(alg.tilde_one()), &[])
}

/// A finite K_im-algebra is determined by its lattice and `~1`, since a
/// minimal negation on a finite Heyting algebra is `a -> ~1`.
pub fn write_kim(name: &str, alg: &KimAlgebra) -> String {
    write_algebra(
        name,
        alg.lattice(),
        Some(alg.tilde_one()),
        &["implication-free algebra; ~a = a -> tilde_one".to_string()],
    )
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    const A_PRIME: &str = "# three-element chain\nalgebra a_prime\nelements 0 a 1\nleq 0 a\nleq a 1\ntilde_one 0 # ~1\nend\n";

    #[test]
    fn parses_and_round_trips() {
        let f = parse_algebra(A_PRIME).unwrap();
        assert_eq!(f.name, "a_prime");
        let alg = f.ccpba().unwrap();
        assert_eq!(alg, a_prime());
        let again = parse_algebra(&write_ccpba("a_prime", &alg)).unwrap();
        assert_eq!(again.ccpba().unwrap(), alg);
    }

    #[test]
    fn kim_round_trip_recovers_the_reduct() {
        let k = Algebra::from_lattice(h6(), "x").unwrap().kim_reduct();
        let back = parse_algebra(&write_kim("k", &k)).unwrap().ccpba().unwrap();
        assert_eq!(back.kim_reduct(), k);
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let e = parse_algebra("algebra x\nelements 0 1\nleq 0 2\nend\n").unwrap_err();
        assert_eq!(e, AlgebraFileError::Syntax(FormatError::new(3, "unknown element `2`")));
        let e = parse_algebra("algebra x\nelements 0 1\nleq 0 1\n").unwrap_err();
        assert!(matches!(e, AlgebraFileError::Syntax(_)));
        let e = parse_algebra("algebra x\nelements 0 1\nfoo\nend\n").unwrap_err();
        assert!(matches!(e, AlgebraFileError::Syntax(FormatError { line: 3, .. })));
    }

    #[test]
    fn structural_errors_are_separate() {
        let e = parse_algebra("algebra x\nelements 0 a b\nleq 0 a\nleq 0 b\nend\n").unwrap_err();
        assert_eq!(e, AlgebraFileError::Lattice(LatticeError::NoTop));
        let f = parse_algebra("algebra h\nelements 0 y z w x 1\nleq 0 y\nleq 0 z\nleq y w\nleq z w\nleq z x\nleq w 1\nleq x 1\ntilde_one w\nend\n")
            .unwrap();
        assert!(matches!(f.ccpba(), Err(AlgebraError::DneViolation { .. })));
    }
}
