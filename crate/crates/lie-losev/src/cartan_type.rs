use std::fmt;
use std::str::FromStr;

use crate::LosevError;

/// One irreducible factor, such as `E7` or `~A1`.
///
/// In the doubly and triply laced types a tilde marks a simply laced factor
/// made of long roots, which are the short coroots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub letter: char,
    pub rank: usize,
    pub tilde: bool,
}

impl Component {
    fn sort_key(&self) -> (std::cmp::Reverse<usize>, bool, char) {
        (std::cmp::Reverse(self.rank), self.tilde, self.letter)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tilde {
            f.write_str("~")?;
        }
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A multiset of irreducible factors in canonical order: rank descending,
/// plain before tilded, then by letter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CartanType {
    components: Vec<Component>,
}

impl CartanType {
    pub fn new(mut components: Vec<Component>) -> Self {
        components.sort_by_key(Component::sort_key);
        CartanType { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Accepts `E7+A1`, `A3+~A1` and `A3+Ã1`, in any order.
impl FromStr for CartanType {
    type Err = LosevError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LosevError::BadCartanType(s.to_string());
        let t = s.trim();
        if t == "0" || t.is_empty() {
            return Ok(CartanType::default());
        }
        let mut out = Vec::new();
        for part in t.split('+') {
            let mut chars: Vec<char> = part.trim().chars().collect();
            let mut tilde = false;
            if chars.first() == Some(&'~') {
                tilde = true;
                chars.remove(0);
            }
            let letter = match chars.first() {
                Some('Ã') => {
                    tilde = true;
                    'A'
                }
                Some(&c) if "ABCDEFG".contains(c) => c,
                _ => return Err(bad()),
            };
            // A combining tilde may follow the letter.
            let mut rest: String = chars[1..].iter().collect();
            if let Some(r) = rest.strip_prefix('\u{303}') {
                tilde = true;
                rest = r.to_string();
            }
            let rank: usize = rest.parse().map_err(|_| bad())?;
            if rank == 0 {
                return Err(bad());
            }
            out.push(Component {
                letter,
                rank,
                tilde,
            });
        }
        Ok(CartanType::new(out))
    }
}

/// Classifies a connected diagram from its Cartan matrix and the relative
/// squared lengths of its simple roots. Returns `None` for graphs outside
/// the finite-type list.
pub(crate) fn classify_component(cartan: &[Vec<i64>], long: &[bool]) -> Option<(char, usize)> {
    let n = cartan.len();
    if n == 1 {
        return Some(('A', 1));
    }
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let mut degree = vec![0usize; n];
    let mut max_bond = 0;
    let mut edges = 0;
    for (i, deg) in degree.iter_mut().enumerate() {
        for j in 0..n {
            if i != j && bond(i, j) > 0 {
                *deg += 1;
                max_bond = max_bond.max(bond(i, j));
                if i < j {
                    edges += 1;
                }
            }
        }
    }
    if edges != n - 1 {
        return None;
    }
    match max_bond {
        3 => (n == 2).then_some(('G', 2)),
        2 => {
            if degree.iter().any(|&d| d > 2) {
                return None;
            }
            let short = long.iter().filter(|&&l| !l).count();
            if n == 2 {
                Some(('B', 2))
            } else if short == 1 {
                Some(('B', n))
            } else if short == n - 1 {
                Some(('C', n))
            } else if n == 4 && short == 2 {
                Some(('F', 4))
            } else {
                None
            }
        }
        1 => {
            let branch: Vec<usize> = (0..n).filter(|&i| degree[i] == 3).collect();
            if degree.iter().any(|&d| d > 3) || branch.len() > 1 {
                return None;
            }
            let Some(&b) = branch.first() else {
                return Some(('A', n));
            };
            let mut arms: Vec<usize> = (0..n)
                .filter(|&j| j != b && bond(b, j) > 0)
                .map(|start| arm_length(cartan, b, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(('D', n)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(('E', n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn arm_length(cartan: &[Vec<i64>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = (0..cartan.len()).find(|&j| j != prev && j != cur && cartan[cur][j] != 0);
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            None => return len,
        }
    }
}
