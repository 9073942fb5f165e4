//! Words over an indexed alphabet, their membership classes, and the
//! token-to-word transformation.
//!
//! A word with parameters (n, k) uses letters `a_1..a_n`, written here as
//! the integers `1..=n`. The base class requires `a_1..a_k` to occur three
//! times each, the remaining letters twice each, under a prefix dominance
//! rule. Two refinements add a sorted final block and restrict what may
//! separate the second and third occurrences of a low letter.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which refinement of the base class a word is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    /// Second and third occurrences of each low letter are adjacent.
    Adjacent,
    /// Only high letters may separate second and third occurrences.
    HighSeparated,
}

impl WordClass {
    fn name(self) -> &'static str {
        match self {
            WordClass::Adjacent => "C1",
            WordClass::HighSeparated => "C2",
        }
    }
}

/// A sequence of letters with declared parameters (n, k).
///
/// Letter `i` stands for `a_i`. Construction does not validate; use the
/// membership checks.
///
/// ```
/// use spinal::Word;
///
/// let w = Word::new(4, 2, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
/// assert!(w.in_class_c1());
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    /// Alphabet size.
    pub n: u32,
    /// Number of low letters (those occurring three times).
    pub k: u32,
    /// The letter sequence.
    pub letters: Vec<u32>,
}

impl Word {
    /// Wraps raw letters with their parameters.
    pub fn new(n: u32, k: u32, letters: Vec<u32>) -> Self {
        Word { n, k, letters }
    }

    /// The letters as a comma-separated string, e.g. `3,1,2,1`.
    pub fn letters_csv(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        parts.join(",")
    }

    fn not_in(&self, class: &str, reason: String) -> Error {
        Error::NotInClass { class: class.to_string(), reason }
    }

    /// Checks membership in the base class, reporting the first failure.
    pub fn check_class_c(&self) -> Result<()> {
        let n = self.n as usize;
        let k = self.k as usize;
        if self.k > self.n {
            return Err(self.not_in("C", format!("k={k} exceeds n={n}")));
        }
        let expected_len = 2 * n + k;
        if self.letters.len() != expected_len {
            return Err(self.not_in(
                "C",
                format!("length {} instead of 2n+k={expected_len}", self.letters.len()),
            ));
        }
        let mut counts = vec![0usize; n + 1];
        for (pos, &x) in self.letters.iter().enumerate() {
            if x == 0 || x as usize > n {
                return Err(self.not_in("C", format!("letter {x} at position {pos} outside 1..={n}")));
            }
            let x = x as usize;
            counts[x] += 1;
            for i in 1..x {
                if counts[i] > 0 && counts[i] < counts[x] {
                    return Err(self.not_in(
                        "C",
                        format!(
                            "dominance fails at position {pos}: letter {i} has {} occurrences, letter {x} has {}",
                            counts[i], counts[x]
                        ),
                    ));
                }
            }
        }
        for i in 1..=n {
            let expected = if i <= k { 3 } else { 2 };
            if counts[i] != expected {
                return Err(self.not_in(
                    "C",
                    format!("letter {i} occurs {} times instead of {expected}", counts[i]),
                ));
            }
        }
        Ok(())
    }

    /// True iff the word lies in the base class.
    pub fn in_class_c(&self) -> bool {
        self.check_class_c().is_ok()
    }

    /// Positions of each letter, indexed by letter value.
    fn occurrence_positions(&self) -> Vec<Vec<usize>> {
        let mut positions = vec![Vec::new(); self.n as usize + 1];
        for (pos, &x) in self.letters.iter().enumerate() {
            if x as usize <= self.n as usize && x > 0 {
                positions[x as usize].push(pos);
            }
        }
        positions
    }

    fn check_suffix_block(&self, class: &str) -> Result<()> {
        let n = self.n as usize;
        let k = self.k as usize;
        let body_len = n + 2 * k;
        let suffix = &self.letters[body_len..];
        let expected: Vec<u32> = (self.k + 1..=self.n).collect();
        if suffix != expected.as_slice() {
            return Err(self.not_in(
                class,
                format!("final block is not a_{}..a_{} in increasing order", k + 1, n),
            ));
        }
        Ok(())
    }

    /// Checks membership in the given refined class.
    pub fn check_class(&self, class: WordClass) -> Result<()> {
        self.check_class_c()?;
        let name = class.name();
        self.check_suffix_block(name)?;
        let positions = self.occurrence_positions();
        for i in 1..=self.k as usize {
            let occ = &positions[i];
            match class {
                WordClass::Adjacent => {
                    if occ[2] != occ[1] + 1 {
                        return Err(self.not_in(
                            name,
                            format!("second and third occurrences of letter {i} are not adjacent"),
                        ));
                    }
                }
                WordClass::HighSeparated => {
                    for pos in occ[1] + 1..occ[2] {
                        let between = self.letters[pos];
                        if between <= self.k {
                            return Err(self.not_in(
                                name,
                                format!(
                                    "low letter {between} lies between the second and third occurrences of letter {i}"
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff the word lies in the adjacent-occurrence class.
    pub fn in_class_c1(&self) -> bool {
        self.check_class(WordClass::Adjacent).is_ok()
    }

    /// True iff the word lies in the high-separated class.
    pub fn in_class_c2(&self) -> bool {
        self.check_class(WordClass::HighSeparated).is_ok()
    }

    /// The representative with high letters renamed so their first
    /// appearances in the body occur in increasing order.
    ///
    /// Two words related by a permutation of high letters canonicalize to
    /// the same result; the final block is unchanged.
    ///
    /// # Errors
    ///
    /// Returns [`Error::NotInClass`] unless the word lies in the
    /// high-separated class (which contains the adjacent-occurrence class).
    pub fn canonicalize_tilde(&self) -> Result<Word> {
        self.check_class(WordClass::HighSeparated)?;
        let body_len = (self.n + 2 * self.k) as usize;
        let mut rename = vec![0u32; self.n as usize + 1];
        let mut next = self.k + 1;
        let mut letters = self.letters.clone();
        for x in letters.iter_mut().take(body_len) {
            if *x > self.k {
                if rename[*x as usize] == 0 {
                    rename[*x as usize] = next;
                    next += 1;
                }
                *x = rename[*x as usize];
            }
        }
        Ok(Word { n: self.n, k: self.k, letters })
    }

    /// True iff the two words are related by a permutation of high letters.
    pub fn equivalent(&self, other: &Word) -> Result<bool> {
        if self.n != other.n || self.k != other.k {
            return Ok(false);
        }
        Ok(self.canonicalize_tilde()?.letters == other.canonicalize_tilde()?.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} k={}", self.n, self.k)?;
        write!(f, "{}", self.letters_csv())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty word text".into()))?;
        let mut n = None;
        let mut k = None;
        for part in header.split_whitespace() {
            if let Some(v) = part.strip_prefix("n=") {
                n = Some(v.parse::<u32>().map_err(|e| Error::Parse(format!("bad n: {e}")))?);
            } else if let Some(v) = part.strip_prefix("k=") {
                k = Some(v.parse::<u32>().map_err(|e| Error::Parse(format!("bad k: {e}")))?);
            } else {
                return Err(Error::Parse(format!("unexpected header token {part:?}")));
            }
        }
        let n = n.ok_or_else(|| Error::Parse("header missing n=".into()))?;
        let k = k.ok_or_else(|| Error::Parse("header missing k=".into()))?;
        let body = lines.next().unwrap_or("");
        if lines.next().is_some() {
            return Err(Error::Parse("trailing lines after word letters".into()));
        }
        let letters = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.trim()
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad letter {t:?}: {e}"))))
                .collect::<Result<Vec<u32>>>()?
        };
        Ok(Word { n, k, letters })
    }
}

/// One token of the bottom-to-top spine description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrqToken {
    /// A spine vertex whose off-spine child is a leaf.
    L,
    /// The i-th reticulation counted from the terminal end.
    R(u32),
    /// The upper (non-adjacent) parent of the i-th reticulation.
    Q(u32),
}

impl fmt::Display for LrqToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrqToken::L => write!(f, "L"),
            LrqToken::R(i) => write!(f, "R{i}"),
            LrqToken::Q(i) => write!(f, "Q{i}"),
        }
    }
}

/// A spine read bottom-to-top, one token per internal spine vertex below
/// the root.
///
/// ```
/// use spinal::LrqWord;
///
/// let lrq: LrqWord = "L R1 L R2 L Q1 Q2 L".parse().unwrap();
/// assert_eq!((lrq.n, lrq.k), (5, 2));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrqWord {
    /// Number of leaves of the described network.
    pub n: u32,
    /// Number of reticulations of the described network.
    pub k: u32,
    /// Tokens for spine vertices u_{l-1} down to u_1, in that reading order.
    pub tokens: Vec<LrqToken>,
}

impl LrqWord {
    /// Builds a token word, deriving (n, k) from the token counts.
    pub fn from_tokens(tokens: Vec<LrqToken>) -> Result<LrqWord> {
        let k = tokens.iter().filter(|t| matches!(t, LrqToken::R(_))).count() as u32;
        let l_count = tokens.iter().filter(|t| matches!(t, LrqToken::L)).count() as u32;
        let word = LrqWord { n: l_count + 1, k, tokens };
        word.validate()?;
        Ok(word)
    }

    /// Checks the structural conditions every realizable token word obeys.
    pub fn validate(&self) -> Result<()> {
        let n = self.n as usize;
        let k = self.k as usize;
        if self.tokens.len() != n - 1 + 2 * k {
            return Err(Error::MalformedLrq(format!(
                "{} tokens instead of n-1+2k={}",
                self.tokens.len(),
                n - 1 + 2 * k
            )));
        }
        let mut r_pos = vec![None; k + 1];
        let mut q_pos = vec![None; k + 1];
        let mut l_count = 0usize;
        let mut next_r = 1u32;
        for (pos, &t) in self.tokens.iter().enumerate() {
            match t {
                LrqToken::L => l_count += 1,
                LrqToken::R(i) => {
                    if i == 0 || i as usize > k {
                        return Err(Error::MalformedLrq(format!("token R{i} outside 1..={k}")));
                    }
                    if i != next_r {
                        return Err(Error::MalformedLrq(format!(
                            "reticulation tokens out of order: saw R{i}, expected R{next_r}"
                        )));
                    }
                    next_r += 1;
                    r_pos[i as usize] = Some(pos);
                    match self.tokens.get(pos + 1) {
                        Some(LrqToken::L) => {}
                        _ => {
                            return Err(Error::MalformedLrq(format!(
                                "R{i} is not immediately followed by L"
                            )))
                        }
                    }
                }
                LrqToken::Q(i) => {
                    if i == 0 || i as usize > k {
                        return Err(Error::MalformedLrq(format!("token Q{i} outside 1..={k}")));
                    }
                    if q_pos[i as usize].is_some() {
                        return Err(Error::MalformedLrq(format!("token Q{i} repeated")));
                    }
                    q_pos[i as usize] = Some(pos);
                }
            }
        }
        if l_count != n - 1 {
            return Err(Error::MalformedLrq(format!("{l_count} L tokens instead of n-1={}", n - 1)));
        }
        if next_r as usize != k + 1 {
            return Err(Error::MalformedLrq(format!("missing reticulation token R{next_r}")));
        }
        for i in 1..=k {
            let r = r_pos[i].unwrap();
            let q = match q_pos[i] {
                Some(q) => q,
                None => return Err(Error::MalformedLrq(format!("missing token Q{i}"))),
            };
            if q <= r + 1 {
                return Err(Error::MalformedLrq(format!(
                    "Q{i} must come after the L that follows R{i}"
                )));
            }
        }
        Ok(())
    }

    /// Applies the token-to-word transformation.
    ///
    /// Tokens `R_i` and `Q_i` and the `L` directly after each `R_i` become
    /// letter `k+1-i`; remaining `L` tokens become `a_{k+1}, a_{k+2}, ...`
    /// assigned from the last token backwards; the sequence is reversed and
    /// the sorted high-letter block is appended. The result lies in the
    /// adjacent-occurrence class with parameters (n-1, k).
    pub fn transform(&self) -> Result<Word> {
        Ok(self.transform_with_steps()?.0)
    }

    /// Like [`LrqWord::transform`], also returning the intermediate stages.
    pub fn transform_with_steps(&self) -> Result<(Word, TransformSteps)> {
        self.validate()?;
        let k = self.k;
        let mut substituted: Vec<Option<u32>> = Vec::with_capacity(self.tokens.len());
        for (pos, &t) in self.tokens.iter().enumerate() {
            let letter = match t {
                LrqToken::R(i) | LrqToken::Q(i) => Some(k + 1 - i),
                LrqToken::L => match pos.checked_sub(1).and_then(|p| self.tokens.get(p)) {
                    Some(LrqToken::R(i)) => Some(k + 1 - i),
                    _ => None,
                },
            };
            substituted.push(letter);
        }
        let mut assigned: Vec<u32> = Vec::new();
        let mut next_high = k + 1;
        let mut filled = substituted.clone();
        for slot in filled.iter_mut().rev() {
            if slot.is_none() {
                *slot = Some(next_high);
                next_high += 1;
            }
        }
        for slot in &filled {
            assigned.push(slot.unwrap());
        }
        let mut reversed = assigned.clone();
        reversed.reverse();
        let n_word = self.n - 1;
        let mut letters = reversed.clone();
        letters.extend(k + 1..=n_word);
        let word = Word { n: n_word, k, letters };
        let steps = TransformSteps { substituted, assigned, reversed };
        Ok((word, steps))
    }
}

impl fmt::Display for LrqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for LrqWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<LrqWord> {
        let mut tokens = Vec::new();
        for part in s.split_whitespace() {
            let token = if part == "L" {
                LrqToken::L
            } else if let Some(i) = part.strip_prefix('R') {
                LrqToken::R(i.parse().map_err(|e| Error::Parse(format!("bad token {part:?}: {e}")))?)
            } else if let Some(i) = part.strip_prefix('Q') {
                LrqToken::Q(i.parse().map_err(|e| Error::Parse(format!("bad token {part:?}: {e}")))?)
            } else {
                return Err(Error::Parse(format!("unexpected token {part:?}")));
            };
            tokens.push(token);
        }
        LrqWord::from_tokens(tokens)
    }
}

/// The intermediate stages of the token-to-word transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformSteps {
    /// After substituting reticulation-derived letters; `None` marks an
    /// unassigned `L`.
    pub substituted: Vec<Option<u32>>,
    /// After assigning high letters to the remaining `L` tokens.
    pub assigned: Vec<u32>,
    /// The assigned sequence reversed (the body of the result).
    pub reversed: Vec<u32>,
}

impl TransformSteps {
    /// The substitution stage as text, with `L` marking unassigned tokens.
    pub fn substituted_display(&self) -> String {
        let parts: Vec<String> = self
            .substituted
            .iter()
            .map(|s| match s {
                Some(x) => x.to_string(),
                None => "L".to_string(),
            })
            .collect();
        parts.join(",")
    }

    /// The assignment stage as comma-separated letters.
    pub fn assigned_display(&self) -> String {
        let parts: Vec<String> = self.assigned.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }
}
