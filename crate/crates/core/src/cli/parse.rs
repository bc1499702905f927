//! Text syntax for braid words.
//!
//! ```text
//! word     := syllable*            (whitespace separated; "." is ignored)
//! syllable := atom ("^" int)?
//! atom     := "d" | "e" | "a(" int "," int ")" | "s(" int ")" | cycle+
//! cycle    := "[" int ("," int)* "]"
//! ```
//!
//! `s(i)` is the Artin generator, read as the band generator `a(i+1,i)`.
//! Juxtaposed cycles multiply left to right; pairwise parallel cycles form a
//! single simple element.

use crate::braidword::{BraidWord, Syllable};
use crate::error::{Error, Result};
use crate::ncp::SimpleElement;

/// Largest accepted `|p|` in `x^p` for a simple `x`.
pub const MAX_SIMPLE_POWER: i64 = 1 << 16;

pub fn parse_braid(n: usize, text: &str) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::BadParameters("need at least one strand".into()));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    let mut word = BraidWord::new(n);
    loop {
        p.skip_separators();
        if p.at_end() {
            return Ok(word);
        }
        let start = p.pos;
        let atom = p.atom()?;
        let power = if p.eat(b'^') { p.power()? } else { 1 };
        if let Some(&c) = p.src.get(p.pos) {
            if !c.is_ascii_whitespace() && c != b'.' {
                return Err(p.error("expected whitespace between syllables"));
            }
        }
        match atom {
            Atom::Identity => {}
            Atom::Delta => word.push(Syllable::Delta(power))?,
            Atom::Product(factors) => {
                if power.abs() > MAX_SIMPLE_POWER {
                    return Err(Error::BadPower(format!(
                        "power {power} at offset {start} exceeds {MAX_SIMPLE_POWER}"
                    )));
                }
                for _ in 0..power.unsigned_abs() {
                    if power > 0 {
                        for a in &factors {
                            word.push(Syllable::Simple(a.clone()))?;
                        }
                    } else {
                        for a in factors.iter().rev() {
                            word.push(Syllable::SimpleInverse(a.clone()))?;
                        }
                    }
                }
            }
        }
    }
}

enum Atom {
    Identity,
    Delta,
    Product(Vec<SimpleElement>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace() || c == b'.') {
            self.pos += 1;
        }
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("expected an integer, found {:?}", digits),
        })
    }

    fn power(&mut self) -> Result<i64> {
        let start = self.pos;
        match self.int() {
            Err(_) if self.pos > start && self.src[self.pos - 1].is_ascii_digit() => Err(Error::BadPower(
                format!("exponent at offset {start} does not fit in 64 bits"),
            )),
            r => r,
        }
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_spaces();
        let i = self.int()?;
        self.skip_spaces();
        if i < 1 || i > self.n as i64 {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(i as usize)
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek() {
            Some(b'd') => {
                self.pos += 1;
                Ok(Atom::Delta)
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(Atom::Identity)
            }
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'(')?;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                self.expect(b')')?;
                Ok(Atom::Product(vec![SimpleElement::band_generator(self.n, i, j)?]))
            }
            Some(b's') => {
                self.pos += 1;
                self.expect(b'(')?;
                let i = self.index()?;
                self.expect(b')')?;
                if i + 1 > self.n {
                    return Err(Error::IndexOutOfRange { index: i as i64 + 1, n: self.n });
                }
                Ok(Atom::Product(vec![SimpleElement::band_generator(self.n, i + 1, i)?]))
            }
            Some(b'[') => {
                let mut cycles = Vec::new();
                while self.peek() == Some(b'[') {
                    cycles.push(self.cycle()?);
                }
                match SimpleElement::from_cycles(self.n, &cycles) {
                    Ok(a) => Ok(Atom::Product(vec![a])),
                    Err(Error::OverlappingBlocks(_) | Error::CrossingBlocks(..)) => cycles
                        .iter()
                        .map(|c| SimpleElement::from_cycles(self.n, &[c]))
                        .collect::<Result<_>>()
                        .map(Atom::Product),
                    Err(e) => Err(e),
                }
            }
            _ => Err(self.error("expected 'd', 'e', 'a(', 's(' or '['")),
        }
    }

    fn cycle(&mut self) -> Result<Vec<i64>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        loop {
            self.skip_spaces();
            out.push(self.int()?);
            self.skip_spaces();
            if self.eat(b']') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }
}
