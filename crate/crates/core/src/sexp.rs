//! Minimal s-expression reader with byte offsets for diagnostics.
//!
//! Atoms are maximal runs of characters other than whitespace, parentheses
//! and `;`. A `;` starts a comment that runs to the end of the line.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom { text: String, offset: usize },
    List { items: Vec<Sexp>, offset: usize },
}

impl Sexp {
    pub fn offset(&self) -> usize {
        match self {
            Sexp::Atom { offset, .. } | Sexp::List { offset, .. } => *offset,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom { text, .. } => Some(text),
            Sexp::List { .. } => None,
        }
    }

    /// Head keyword and tail of a list whose first item is an atom.
    pub fn as_form(&self) -> Option<(&str, &[Sexp])> {
        match self {
            Sexp::List { items, .. } => match items.first() {
                Some(Sexp::Atom { text, .. }) => Some((text.as_str(), &items[1..])),
                _ => None,
            },
            Sexp::Atom { .. } => None,
        }
    }

    /// Short rendering for error messages.
    pub fn snippet(&self) -> String {
        match self {
            Sexp::Atom { text, .. } => text.clone(),
            Sexp::List { items, .. } => match items.first() {
                Some(Sexp::Atom { text, .. }) => format!("({text} ...)"),
                _ => "(...)".to_string(),
            },
        }
    }
}

pub fn syntax_error(at: &Sexp, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset: at.offset(),
        token: at.snippet(),
        message: message.into(),
    }
}

/// Reads every top-level expression in `text`.
pub fn parse_all(text: &str) -> Result<Vec<Sexp>> {
    let mut reader = Reader { text, pos: 0 };
    let mut out = Vec::new();
    loop {
        reader.skip_trivia();
        if reader.pos >= text.len() {
            return Ok(out);
        }
        out.push(reader.expr()?);
    }
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else if c == ';' {
                match self.text[self.pos..].find('\n') {
                    Some(n) => self.pos += n + 1,
                    None => self.pos = self.text.len(),
                }
            } else {
                break;
            }
        }
    }

    fn expr(&mut self) -> Result<Sexp> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => {
                            return Err(Error::Syntax {
                                offset: start,
                                token: "(".into(),
                                message: "unclosed parenthesis".into(),
                            })
                        }
                        Some(')') => {
                            self.pos += 1;
                            return Ok(Sexp::List {
                                items,
                                offset: start,
                            });
                        }
                        Some(_) => items.push(self.expr()?),
                    }
                }
            }
            Some(')') => Err(Error::Syntax {
                offset: start,
                token: ")".into(),
                message: "unexpected `)`".into(),
            }),
            Some(_) => {
                let rest = &self.text[self.pos..];
                let len = rest
                    .find(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == ';')
                    .unwrap_or(rest.len());
                self.pos += len;
                Ok(Sexp::Atom {
                    text: rest[..len].to_string(),
                    offset: start,
                })
            }
            None => Err(Error::Syntax {
                offset: start,
                token: String::new(),
                message: "unexpected end of input".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_lists_and_comments() {
        let v = parse_all("(a (b c)) ; trailing\n(d)").unwrap();
        assert_eq!(v.len(), 2);
        let (head, tail) = v[0].as_form().unwrap();
        assert_eq!(head, "a");
        assert_eq!(tail.len(), 1);
        assert_eq!(v[1].offset(), 21);
    }

    #[test]
    fn unbalanced() {
        assert!(matches!(
            parse_all("(a (b)"),
            Err(Error::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_all("a)"),
            Err(Error::Syntax { offset: 1, .. })
        ));
    }
}
