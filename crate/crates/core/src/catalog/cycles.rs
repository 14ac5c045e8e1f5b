//! Disjoint-cycle notation: `perm := "()" | cycle+`,
//! `cycle := "(" int ("," int)+ ")"`, 1-based points, whitespace ignored.

use crate::error::{Error, Result};
use crate::perm::Permutation;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            other => Err(self.unexpected(other, &format!("'{}'", c as char))),
        }
    }

    fn unexpected(&self, found: Option<u8>, wanted: &str) -> Error {
        let message = match found {
            Some(b) => format!("expected {wanted}, found '{}'", b as char),
            None => format!("expected {wanted}, found end of input"),
        };
        Error::Syntax {
            offset: self.pos,
            message,
        }
    }

    fn int(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected(self.bytes.get(self.pos).copied(), "a point"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value = text.parse::<usize>().map_err(|_| Error::Syntax {
            offset: start,
            message: format!("point {text} is too large"),
        })?;
        Ok((value, start))
    }
}

pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];

    // "()" alone denotes the identity.
    if cur.peek() == Some(b'(') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.peek() == Some(b')') {
            cur.pos += 1;
            return match cur.peek() {
                None => Ok(Permutation::identity(degree)),
                other => Err(cur.unexpected(other, "end of input after \"()\"")),
            };
        }
        cur.pos = save;
    }

    let mut cycles = 0;
    while cur.peek().is_some() {
        cur.expect(b'(')?;
        let mut points = Vec::new();
        loop {
            let (pt, offset) = cur.int()?;
            if pt == 0 || pt > degree {
                return Err(Error::PointOutOfRange {
                    point: pt,
                    degree,
                    offset,
                });
            }
            if used[pt - 1] {
                return Err(Error::RepeatedPoint { point: pt, offset });
            }
            used[pt - 1] = true;
            points.push(pt - 1);
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b')') => {
                    cur.pos += 1;
                    break;
                }
                other => return Err(cur.unexpected(other, "',' or ')'")),
            }
        }
        if points.len() < 2 {
            return Err(Error::Syntax {
                offset: cur.pos - 1,
                message: "a cycle needs at least two points".into(),
            });
        }
        for (i, &a) in points.iter().enumerate() {
            images[a] = points[(i + 1) % points.len()] as u32;
        }
        cycles += 1;
    }
    if cycles == 0 {
        return Err(cur.unexpected(None, "a cycle or \"()\""));
    }
    Ok(Permutation::from_images_unchecked(images))
}

pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&pts.join(","));
        out.push(')');
    }
    out
}
