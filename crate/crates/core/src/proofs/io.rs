//! The `.prf` text format.
//!
//! ```text
//! proof hilbert ILM
//! 1 top -> (bot -> top) axiom A1
//! 2 (top -> (bot -> top)) -> top axiom A7
//! 3 top mp 2 1
//! qed top
//! end
//! ```
//!
//! Sequent derivations use `proof sequent <system>` and lines
//! `<n> <lhs> |- <rhs> axiom <id>`, `... rule <id> from <i> [<j>]` or
//! `... hyp` (an open premise), with no `qed` line.

use thiserror::Error;

use super::{
    Derivation, DerivationLine, HilbertSystem, Justification, ProofLine, ProofScript, ScriptError, SequentSystem,
    Step,
};
use crate::formula::{parse, Formula, Sequent};
use crate::text::{content_lines, expect_end, expect_keyword, FormatError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProofFileError {
    #[error(transparent)]
    Syntax(#[from] FormatError),
    #[error(transparent)]
    Script(#[from] ScriptError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofFile {
    Hilbert { system: HilbertSystem, script: ProofScript },
    Sequent { system: SequentSystem, derivation: Derivation },
}

fn number(n: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::new(n, format!("expected a line number, found `{tok}`")))
}

fn formula_at(n: usize, text: &str) -> Result<Formula, FormatError> {
    parse(text).map_err(|e| FormatError::new(n, e.to_string()))
}

/// Splits `<n> <body> <justification...>`, reading the justification from
/// the right so the body may contain any tokens.
fn split_line<'a>(n: usize, line: &'a str, tail_len: usize) -> Result<(usize, String), FormatError> {
    let toks: Vec<&'a str> = line.split_whitespace().collect();
    if toks.len() < tail_len + 2 {
        return Err(FormatError::new(n, "line too short"));
    }
    Ok((number(n, toks[0])?, toks[1..toks.len() - tail_len].join(" ")))
}

fn hilbert_line(n: usize, line: &str) -> Result<ProofLine, FormatError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let k = toks.len();
    let (tail, justification) = if k >= 2 && toks[k - 2] == "axiom" {
        (2, Justification::Axiom(toks[k - 1].to_string()))
    } else if k >= 3 && toks[k - 3] == "mp" {
        (3, Justification::Mp(number(n, toks[k - 2])?, number(n, toks[k - 1])?))
    } else {
        return Err(FormatError::new(n, "expected `axiom <id>` or `mp <i> <j>` at the end of the line"));
    };
    let (index, body) = split_line(n, line, tail)?;
    Ok(ProofLine { index, formula: formula_at(n, &body)?, justification })
}

fn sequent_line(n: usize, line: &str) -> Result<DerivationLine, FormatError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let k = toks.len();
    let (tail, step) = if toks.last() == Some(&"hyp") {
        (1, Step::Hyp)
    } else if k >= 2 && toks[k - 2] == "axiom" {
        (2, Step::Axiom(toks[k - 1].to_string()))
    } else if k >= 4 && toks[k - 4] == "rule" && toks[k - 2] == "from" {
        (4, Step::Rule(toks[k - 3].to_string(), vec![number(n, toks[k - 1])?]))
    } else if k >= 5 && toks[k - 5] == "rule" && toks[k - 3] == "from" {
        (5, Step::Rule(toks[k - 4].to_string(), vec![number(n, toks[k - 2])?, number(n, toks[k - 1])?]))
    } else if k >= 3 && toks[k - 3] == "rule" && toks[k - 1] == "from" {
        (3, Step::Rule(toks[k - 2].to_string(), Vec::new()))
    } else {
        return Err(FormatError::new(
            n,
            "expected `axiom <id>`, `rule <id> from <i> [<j>]` or `hyp` at the end of the line",
        ));
    };
    let (index, body) = split_line(n, line, tail)?;
    let sequent = Sequent::parse(&body).map_err(|e| FormatError::new(n, e.to_string()))?;
    Ok(DerivationLine { index, sequent, step })
}

pub fn parse_proof(text: &str) -> Result<ProofFile, ProofFileError> {
    let lines = content_lines(text);
    let first = *lines.first().ok_or_else(|| FormatError::new(1, "empty file"))?;
    let header = expect_keyword(first, "proof")?;
    let bad_system = |s: &str| FormatError::new(first.0, format!("unknown proof system `{s}`"));
    match header[..] {
        ["hilbert", s] => {
            let system: HilbertSystem = s.parse().map_err(|_| bad_system(s))?;
            let mut body = Vec::new();
            let mut at = 1;
            let goal = loop {
                let &(n, line) = lines.get(at).ok_or_else(|| FormatError::new(first.0, "missing `qed`"))?;
                if let Some(rest) = line.strip_prefix("qed ") {
                    break formula_at(n, rest)?;
                }
                body.push(hilbert_line(n, line)?);
                at += 1;
            };
            expect_end(&lines, at + 1)?;
            Ok(ProofFile::Hilbert { system, script: ProofScript::new(body, goal)? })
        }
        ["sequent", s] => {
            let system: SequentSystem = s.parse().map_err(|_| bad_system(s))?;
            let mut body = Vec::new();
            let mut at = 1;
            while let Some(&(n, line)) = lines.get(at) {
                if line == "end" {
                    break;
                }
                body.push(sequent_line(n, line)?);
                at += 1;
            }
            expect_end(&lines, at)?;
            Ok(ProofFile::Sequent { system, derivation: Derivation::new(body)? })
        }
        _ => Err(FormatError::new(first.0, "expected `proof <hilbert|sequent> <system>`").into()),
    }
}

pub fn write_hilbert(system: HilbertSystem, script: &ProofScript, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("proof hilbert {system}\n"));
    for l in script.lines() {
        let j = match &l.justification {
            Justification::Axiom(id) => format!("axiom {id}"),
            Justification::Mp(i, k) => format!("mp {i} {k}"),
        };
        out.push_str(&format!("{} {} {j}\n", l.index, l.formula));
    }
    out.push_str(&format!("qed {}\nend\n", script.goal()));
    out
}

pub fn write_derivation(system: SequentSystem, d: &Derivation, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("proof sequent {system}\n"));
    for l in d.lines() {
        let j = match &l.step {
            Step::Axiom(id) => format!("axiom {id}"),
            Step::Rule(id, from) => {
                let from: Vec<String> = from.iter().map(usize::to_string).collect();
                format!("rule {id} from {}", from.join(" "))
            }
            Step::Hyp => "hyp".to_string(),
        };
        out.push_str(&format!("{} {} {j}\n", l.index, l.sequent));
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::{check_hilbert, check_sequent_derivation};

    const TOP: &str = "proof hilbert ILM\n1 top -> (bot -> top) axiom A1\n2 (top -> (bot -> top)) -> top axiom A7\n3 top mp 2 1\nqed top\nend\n";

    #[test]
    fn hilbert_round_trip() {
        let parsed = parse_proof(TOP).unwrap();
        let ProofFile::Hilbert { system, script } = &parsed else { panic!() };
        assert_eq!(*system, HilbertSystem::Ilm);
        assert_eq!(check_hilbert(*system, script), Ok(()));
        let text = write_hilbert(*system, script, &[]);
        assert!(text.contains("1 top -> bot -> top axiom A1\n"));
        assert_eq!(parse_proof(&text).unwrap(), parsed);
    }

    #[test]
    fn sequent_round_trip() {
        let text = "proof sequent Kim\n1 p |- q hyp\n2 p |- r hyp\n3 p |- q & r rule A4 from 1 2\nend\n";
        let ProofFile::Sequent { system, derivation } = parse_proof(text).unwrap() else { panic!() };
        assert!(check_sequent_derivation(system, &derivation).is_ok());
        assert_eq!(write_derivation(system, &derivation, &[]), text);
    }

    #[test]
    fn formula_containing_keywords_is_read_from_the_right() {
        let text = "proof sequent Kim'\n1 p |- p axiom A1\nend\n";
        assert!(parse_proof(text).is_ok());
        let e = parse_proof("proof hilbert ILM\n1 p -> p\nqed p -> p\nend\n").unwrap_err();
        assert!(matches!(e, ProofFileError::Syntax(FormatError { line: 2, .. })));
    }

    #[test]
    fn structural_errors() {
        let e = parse_proof("proof hilbert ILM\n1 top mp 1 1\nqed top\nend\n").unwrap_err();
        assert!(matches!(e, ProofFileError::Script(ScriptError::ForwardReference { .. })));
        let e = parse_proof("proof hilbert XYZ\nend\n").unwrap_err();
        assert!(matches!(e, ProofFileError::Syntax(FormatError { line: 1, .. })));
        let e = parse_proof("proof hilbert ILM\n1 top axiom A7\nend\n").unwrap_err();
        assert!(matches!(e, ProofFileError::Syntax(_)));
    }
}
