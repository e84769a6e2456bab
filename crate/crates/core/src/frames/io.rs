//! The `.frm` text format.
//!
//! ```text
//! frame subnormal three_world
//! worlds w0 w1 w2
//! leq w0 w1
//! leq w0 w2
//! y0 w2
//! end
//! ```
//!
//! N-hat frames use `rn1 a b` and `rn2 a b` lines, compatibility frames `c a b`.

use thiserror::Error;

use super::{members, CompatFrame, Frame, FrameError, FrameKind, NhatFrame, Poset, SubNormalFrame, WorldSet};
use crate::text::{content_lines, expect_end, expect_keyword, FormatError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrameFileError {
    #[error(transparent)]
    Syntax(#[from] FormatError),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameFile {
    pub name: String,
    pub frame: Frame,
}

pub fn parse_frame(text: &str) -> Result<FrameFile, FrameFileError> {
    let lines = content_lines(text);
    let first = *lines.first().ok_or_else(|| FormatError::new(1, "empty file"))?;
    let header = expect_keyword(first, "frame")?;
    let (kind, name) = match header[..] {
        ["subnormal", n] => (FrameKind::SubNormal, n),
        ["nhat", n] => (FrameKind::Nhat, n),
        ["compat", n] => (FrameKind::Compat, n),
        _ => {
            return Err(FormatError::new(first.0, "expected `frame <subnormal|nhat|compat> <name>`").into())
        }
    };
    let second = *lines.get(1).ok_or_else(|| FormatError::new(first.0, "missing `worlds`"))?;
    let worlds = expect_keyword(second, "worlds")?;
    if worlds.is_empty() {
        return Err(FormatError::new(second.0, "no worlds").into());
    }
    let mut leq = Vec::new();
    let mut y0: Option<Vec<&str>> = None;
    let (mut rn1, mut rn2, mut c) = (Vec::new(), Vec::new(), Vec::new());
    let mut at = 2;
    let known = |n: usize, w: &str| {
        if worlds.contains(&w) {
            Ok(())
        } else {
            Err(FormatError::new(n, format!("unknown world `{w}`")))
        }
    };
    while let Some(&(n, line)) = lines.get(at) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (kind, &toks[..]) {
            (_, ["end"]) => break,
            (_, ["leq", a, b]) => {
                known(n, a)?;
                known(n, b)?;
                leq.push((*a, *b));
            }
            (FrameKind::SubNormal, ["y0", rest @ ..]) => {
                if y0.is_some() {
                    return Err(FormatError::new(n, "duplicate `y0`").into());
                }
                for w in rest {
                    known(n, w)?;
                }
                y0 = Some(rest.to_vec());
            }
            (FrameKind::Nhat, [r @ ("rn1" | "rn2"), a, b]) => {
                known(n, a)?;
                known(n, b)?;
                if *r == "rn1" { &mut rn1 } else { &mut rn2 }.push((*a, *b));
            }
            (FrameKind::Compat, ["c", a, b]) => {
                known(n, a)?;
                known(n, b)?;
                c.push((*a, *b));
            }
            _ => return Err(FormatError::new(n, format!("unexpected `{line}`")).into()),
        }
        at += 1;
    }
    expect_end(&lines, at)?;
    let frame = match kind {
        FrameKind::SubNormal => {
            Frame::SubNormal(SubNormalFrame::build(&worlds, &leq, &y0.unwrap_or_default())?)
        }
        FrameKind::Nhat => Frame::Nhat(NhatFrame::build(&worlds, &leq, &rn1, &rn2)?),
        FrameKind::Compat => Frame::Compat(CompatFrame::build(&worlds, &leq, &c)?),
    };
    Ok(FrameFile { name: name.to_string(), frame })
}

fn relation_lines(out: &mut String, key: &str, p: &Poset, rel: &[WorldSet]) {
    for x in p.worlds() {
        for y in members(rel[x]) {
            out.push_str(&format!("{key} {} {}\n", p.name(x), p.name(y)));
        }
    }
}

/// Writes the order as covering pairs and relations in full.
pub fn write_frame(name: &str, frame: &Frame, comments: &[String]) -> String {
    let p = frame.poset();
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("frame {} {name}\n", frame.kind().keyword()));
    out.push_str(&format!("worlds {}\n", p.names().join(" ")));
    for (a, b) in p.covers() {
        out.push_str(&format!("leq {} {}\n", p.name(a), p.name(b)));
    }
    match frame {
        Frame::SubNormal(f) => {
            let ws = p.set_names(f.y0());
            if ws.is_empty() {
                out.push_str("y0\n");
            } else {
                out.push_str(&format!("y0 {}\n", ws.join(" ")));
            }
        }
        Frame::Nhat(f) => {
            relation_lines(&mut out, "rn1", p, f.rn1());
            relation_lines(&mut out, "rn2", p, f.rn2());
        }
        Frame::Compat(f) => relation_lines(&mut out, "c", p, f.c()),
    }
    out.push_str("end\n");
    out
}
