use crate::error::{Error, Result};

/// A word is a sequence of symbol indices into an [`Alphabet`], earliest
/// symbol first.
pub type Word = Vec<usize>;

/// Ordered list of distinct symbol names.
///
/// When every name is a single character, words are written by concatenation
/// (`"0110"`); otherwise symbols are comma-separated (`"up,down,up"`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<String>);

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Alphabet("alphabet is empty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.contains(',') || s.contains(';') || s.chars().any(char::is_whitespace) {
                return Err(Error::Alphabet(format!("bad symbol name {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Alphabet(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Self(symbols))
    }

    /// Symbols `"0"`, `"1"`, …, `"n-1"`.
    pub fn numbered(n: usize) -> Self {
        Self((0..n).map(|i| i.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    fn single_char(&self) -> bool {
        self.0.iter().all(|s| s.chars().count() == 1)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::new());
        }
        if self.single_char() && !text.contains(',') {
            text.chars().map(|c| self.index_of(c.encode_utf8(&mut [0; 4]))).collect()
        } else {
            text.split(',').map(|s| self.index_of(s.trim())).collect()
        }
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        let sep = if self.single_char() { "" } else { "," };
        word.iter().map(|&i| self.0[i].as_str()).collect::<Vec<_>>().join(sep)
    }

    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.len()) {
            Some(s) => Err(Error::UnknownSymbol(format!("#{s}"))),
            None => Ok(()),
        }
    }

    /// All `|A|^n` words of length `n` in lexicographic order.
    pub fn words(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let k = self.len();
        let total = k.checked_pow(n as u32).unwrap_or(usize::MAX);
        (0..total).map(move |mut code| {
            let mut w = vec![0; n];
            for slot in w.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            w
        })
    }

    /// All words of length `0..=n`, shortest first.
    pub fn words_up_to(&self, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|len| self.words(len).collect::<Vec<_>>()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_char_words() {
        let a = Alphabet::numbered(2);
        assert_eq!(a.parse_word("0110").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(a.parse_word("").unwrap(), Word::new());
        assert!(matches!(a.parse_word("012"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn parses_multi_char_words() {
        let a = Alphabet::new(["up", "down"]).unwrap();
        assert_eq!(a.parse_word("up,down,up").unwrap(), vec![0, 1, 0]);
        assert_eq!(a.format_word(&[1, 0]), "down,up");
    }

    #[test]
    fn rejects_duplicates() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn enumerates_words_in_order() {
        let a = Alphabet::numbered(2);
        let w: Vec<_> = a.words(2).collect();
        assert_eq!(w, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(a.words(0).collect::<Vec<_>>(), vec![Word::new()]);
        assert_eq!(a.words_up_to(2).len(), 7);
    }
}
