//! Set expressions for the `ops` command.
//!
//! ```text
//! expr    := inter (("∪" | "|") inter)*
//! inter   := prefix (("∩" | "&") prefix)*
//! prefix  := ("~" | "!") prefix | postfix
//! postfix := atom ("ᶜ" | "'" | "^c")*
//! atom    := name | "(" expr ")" | ("⋃" | "⋂") name
//! ```
//!
//! Intersection binds tighter than union and both associate to the left, so
//! `A ∪ B ∩ C` is `A ∪ (B ∩ C)`. `⋃F` and `⋂F` fold a family.

use std::iter::Peekable;
use std::str::CharIndices;

use crate::document::Document;
use crate::error::{Error, Result};
use crate::hfs::Hfs;
use crate::laws::Term;

pub fn parse_expr(text: &str) -> Result<Term> {
    let mut p = Parser {
        text,
        chars: text.char_indices().peekable(),
    };
    let term = p.union()?;
    p.skip_ws();
    match p.chars.peek() {
        None => Ok(term),
        Some(&(at, c)) => Err(p.error(at, format!("unexpected {c:?}"))),
    }
}

/// Parses and evaluates `text` against the sets and families of `doc`.
pub fn eval_expr(doc: &Document, text: &str) -> Result<(Term, Hfs)> {
    let term = parse_expr(text)?;
    for name in term.set_names() {
        doc.set(name)?;
    }
    for name in term.family_names() {
        doc.family(name)?;
    }
    let set = term.eval(&doc.to_binding()?);
    Ok((term, set))
}

struct Parser<'s> {
    text: &'s str,
    chars: Peekable<CharIndices<'s>>,
}

fn is_name_start(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn is_name_char(c: char) -> bool {
    // `ᶜ` is alphabetic but always means complement.
    (c.is_alphanumeric() || matches!(c, '_' | '.' | '-')) && c != 'ᶜ'
}

impl Parser<'_> {
    fn error(&self, byte: usize, message: String) -> Error {
        Error::Expression {
            offset: self.text[..byte].chars().count(),
            message,
        }
    }

    fn end(&self) -> usize {
        self.text.len()
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn eat(&mut self, options: &[char]) -> bool {
        self.skip_ws();
        self.chars.next_if(|(_, c)| options.contains(c)).is_some()
    }

    fn union(&mut self) -> Result<Term> {
        let mut term = self.inter()?;
        while self.eat(&['∪', '|']) {
            term = term.cup(self.inter()?);
        }
        Ok(term)
    }

    fn inter(&mut self) -> Result<Term> {
        let mut term = self.prefix()?;
        while self.eat(&['∩', '&']) {
            term = term.cap(self.prefix()?);
        }
        Ok(term)
    }

    fn prefix(&mut self) -> Result<Term> {
        if self.eat(&['~', '!']) {
            return Ok(self.prefix()?.c());
        }
        let mut term = self.atom()?;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(&(_, 'ᶜ' | '\'')) => {
                    self.chars.next();
                }
                Some(&(at, '^')) => {
                    self.chars.next();
                    if self.chars.next_if(|&(_, c)| c == 'c').is_none() {
                        return Err(self.error(at, "expected \"c\" after \"^\"".into()));
                    }
                }
                _ => break,
            }
            term = term.c();
        }
        Ok(term)
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        let Some((at, c)) = self.chars.next() else {
            return Err(self.error(self.end(), "expected a set name or \"(\"".into()));
        };
        match c {
            '(' => {
                let term = self.union()?;
                if !self.eat(&[')']) {
                    let end = self.end();
                    let at = self.chars.peek().map_or(end, |&(i, _)| i);
                    return Err(self.error(at, "expected \")\"".into()));
                }
                Ok(term)
            }
            '⋃' => Ok(Term::FoldUnion(self.name_after(at)?)),
            '⋂' => Ok(Term::FoldInter(self.name_after(at)?)),
            c if is_name_start(c) && c != 'ᶜ' => Ok(Term::Var(self.name_from(at))),
            c => Err(self.error(at, format!("unexpected {c:?}"))),
        }
    }

    fn name_after(&mut self, op: usize) -> Result<String> {
        self.skip_ws();
        match self.chars.next() {
            Some((at, c)) if is_name_start(c) && c != 'ᶜ' => Ok(self.name_from(at)),
            _ => Err(self.error(op, "expected a family name after fold".into())),
        }
    }

    /// Name starting at `start`, whose first char has been consumed.
    fn name_from(&mut self, start: usize) -> String {
        let mut end = self.end();
        while let Some(&(i, c)) = self.chars.peek() {
            if !is_name_char(c) {
                end = i;
                break;
            }
            self.chars.next();
        }
        self.text[start..end].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(text: &str) -> String {
        parse_expr(text).unwrap().to_string()
    }

    fn offset(text: &str) -> usize {
        match parse_expr(text) {
            Err(Error::Expression { offset, .. }) => offset,
            other => panic!("{text:?}: {other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(show("A ∪ B ∩ C"), "A ∪ (B ∩ C)");
        assert_eq!(show("A & B | C"), "(A ∩ B) ∪ C");
        assert_eq!(show("A|B|C"), "(A ∪ B) ∪ C");
        assert_eq!(show("(A ∪ B) ∩ C"), "(A ∪ B) ∩ C");
    }

    #[test]
    fn complement_spellings() {
        for text in ["Aᶜ", "A'", "A^c", "~A", "!A", " ( A ) ^c "] {
            assert_eq!(show(text), "Aᶜ", "{text}");
        }
        assert_eq!(show("(A ∩ B)''"), "(A ∩ B)ᶜᶜ");
        assert_eq!(show("~A ∪ B"), "Aᶜ ∪ B");
        assert_eq!(show("~(A ∪ B)"), "(A ∪ B)ᶜ");
    }

    #[test]
    fn names_and_folds() {
        assert_eq!(show("x_1 ∪ F.H2"), "x_1 ∪ F.H2");
        assert_eq!(show("⋃F ∩ ⋂ G"), "⋃F ∩ ⋂G");
        let t = parse_expr("(A ∪ B) ∩ A ∪ ⋃F").unwrap();
        assert_eq!(t.set_names(), ["A", "B"]);
        assert_eq!(t.family_names(), ["F"]);
    }

    #[test]
    fn errors_carry_char_offsets() {
        assert_eq!(offset(""), 0);
        assert_eq!(offset("A ∪"), 3);
        assert_eq!(offset("A ∪ ∩ B"), 4);
        assert_eq!(offset("(A ∪ B"), 6);
        assert_eq!(offset("A B"), 2);
        assert_eq!(offset("A^d"), 1);
        assert_eq!(offset("⋃ )"), 0);
    }

    #[test]
    fn evaluates_against_documents() {
        let doc = Document::from_json(
            r#"{"universe":["x"],"sets":{"A":{"x":["0.2","0.4"]},"B":{"x":["0.3"]}},
                "families":{"F":["A","B"]}}"#,
        )
        .unwrap();
        let (_, set) = eval_expr(&doc, "A ∪ B").unwrap();
        assert_eq!(set.at(0).to_string(), "{0.4, 0.3}");
        let (_, set) = eval_expr(&doc, "⋂F'").unwrap();
        assert_eq!(set.at(0).to_string(), "{0.8, 0.7}");
        assert!(matches!(eval_expr(&doc, "A ∪ Q"), Err(Error::UnknownSet(_))));
        assert!(matches!(eval_expr(&doc, "⋃G"), Err(Error::UnknownFamily(_))));
    }
}
