use std::fmt;
use std::str::FromStr;

use crate::WeylError;

/// A word in the generators, letters numbered from 1.
///
/// The word `s_{i_1} … s_{i_k}` acts on a vector by applying `s_{i_k}`
/// first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Panics if a letter is 0.
    pub fn new(letters: Vec<usize>) -> Self {
        assert!(
            letters.iter().all(|&l| l > 0),
            "letters are numbered from 1"
        );
        WeylWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word read backwards, which spells the inverse element.
    pub fn inverse(&self) -> Self {
        WeylWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// `s · self`.
    pub fn prepend(&self, s: usize) -> Self {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(s);
        letters.extend_from_slice(&self.letters);
        WeylWord::new(letters)
    }

    /// `self · s`.
    pub fn append(&self, s: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.push(s);
        WeylWord::new(letters)
    }

    /// `self · other`.
    pub fn concat(&self, other: &WeylWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> Self {
        WeylWord {
            letters: self.letters.repeat(k),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for l in &self.letters {
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// Accepts `e` for the identity, letters `sK` written together or apart,
/// and parenthesised powers such as `(s2s3s5s4)^2s7`.
impl FromStr for WeylWord {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == ['e'] || compact == ['1'] {
            return Ok(WeylWord::identity());
        }
        let mut pos = 0;
        let word = parse_seq(&compact, &mut pos).ok_or_else(|| WeylError::Parse(s.to_string()))?;
        if pos != compact.len() || word.is_empty() {
            return Err(WeylError::Parse(s.to_string()));
        }
        Ok(word)
    }
}

fn parse_number(c: &[char], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while *pos < c.len() && c[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return None;
    }
    c[start..*pos].iter().collect::<String>().parse().ok()
}

fn parse_seq(c: &[char], pos: &mut usize) -> Option<WeylWord> {
    let mut letters = Vec::new();
    while *pos < c.len() {
        match c[*pos] {
            's' => {
                *pos += 1;
                let n = parse_number(c, pos)?;
                if n == 0 {
                    return None;
                }
                letters.push(n);
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return None;
                }
                *pos += 1;
                let mut k = 1;
                if c.get(*pos) == Some(&'^') {
                    *pos += 1;
                    k = parse_number(c, pos)?;
                }
                letters.extend(inner.pow(k).letters);
            }
            ')' => break,
            _ => return None,
        }
    }
    Some(WeylWord { letters })
}
