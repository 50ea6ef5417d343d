//! The `.quant` text format.
//!
//! ```text
//! quantale q4
//! elements: bot a b top
//! order:
//!   bot <= a
//!   a <= top
//! mul:
//!   bot: bot bot bot bot
//!   ...
//! end
//! ```
//!
//! `#` starts a comment. Order lines may chain (`a <= b <= c`). Mul rows may
//! appear in any order but each element needs exactly one.

use std::collections::HashMap;

use crate::error::{Error, Result, Span};
use crate::quantale::{Elem, FiniteQuantale};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok<'a> {
    Word(&'a str),
    Colon,
    Leq,
    Arrow,
}

impl Tok<'_> {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Colon => "`:`".into(),
            Tok::Leq => "`<=`".into(),
            Tok::Arrow => "`->`".into(),
        }
    }
}

/// A non-blank line with its tokens and their 1-based columns.
#[derive(Debug)]
pub(crate) struct Line<'a> {
    pub no: usize,
    pub toks: Vec<(Tok<'a>, usize)>,
    /// Column just past the last token, for "found end of line" errors.
    pub end: usize,
}

impl<'a> Line<'a> {
    pub fn span(&self, k: usize) -> Span {
        let col = self.toks.get(k).map_or(self.end, |t| t.1);
        Span { line: self.no, col }
    }

    pub fn found(&self, k: usize) -> String {
        self.toks.get(k).map_or_else(|| "end of line".into(), |t| t.0.describe())
    }

    pub fn word(&self, k: usize) -> Option<&'a str> {
        match self.toks.get(k) {
            Some((Tok::Word(w), _)) => Some(w),
            _ => None,
        }
    }

    pub fn is(&self, k: usize, tok: &Tok<'_>) -> bool {
        self.toks.get(k).is_some_and(|t| t.0 == *tok)
    }

    pub fn expect(&self, k: usize, tok: Tok<'_>) -> Result<()> {
        if self.is(k, &tok) {
            Ok(())
        } else {
            Err(self.unexpected(k, tok.describe()))
        }
    }

    pub fn expect_word(&self, k: usize, what: &str) -> Result<&'a str> {
        self.word(k).ok_or_else(|| self.unexpected(k, what.to_string()))
    }

    pub fn expect_end(&self, k: usize) -> Result<()> {
        if k >= self.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected(k, "end of line".into()))
        }
    }

    pub fn unexpected(&self, k: usize, expected: String) -> Error {
        Error::Syntax { at: self.span(k), expected, found: self.found(k) }
    }

    /// `keyword :` with nothing after the colon.
    pub fn is_section(&self, keyword: &str) -> bool {
        self.word(0) == Some(keyword) && self.is(1, &Tok::Colon) && self.toks.len() == 2
    }
}

pub(crate) fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let code = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let bytes = code.as_bytes();
        let mut i = 0;
        let col = |i: usize| code[..i].chars().count() + 1;
        while i < bytes.len() {
            let rest = &code[i..];
            let c = rest.chars().next().expect("in bounds");
            if c.is_whitespace() {
                i += c.len_utf8();
            } else if c == ':' {
                toks.push((Tok::Colon, col(i)));
                i += 1;
            } else if rest.starts_with("<=") {
                toks.push((Tok::Leq, col(i)));
                i += 2;
            } else if rest.starts_with("->") {
                toks.push((Tok::Arrow, col(i)));
                i += 2;
            } else {
                let start = i;
                while i < bytes.len() {
                    let r = &code[i..];
                    let ch = r.chars().next().expect("in bounds");
                    if ch.is_whitespace() || ch == ':' || r.starts_with("<=") || r.starts_with("->") {
                        break;
                    }
                    i += ch.len_utf8();
                }
                toks.push((Tok::Word(&code[start..i]), col(start)));
            }
        }
        if !toks.is_empty() {
            out.push(Line { no: no + 1, toks, end: col(code.trim_end().len()) });
        }
    }
    out
}

/// Resolves labels against a declared element list.
pub(crate) struct Labels<'a> {
    index: HashMap<&'a str, Elem>,
}

impl<'a> Labels<'a> {
    pub fn lookup(&self, line: &Line<'_>, k: usize) -> Result<Elem> {
        let w = line.expect_word(k, "an element label")?;
        self.get(w, line.span(k))
    }

    pub fn get(&self, w: &str, at: Span) -> Result<Elem> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::UndeclaredLabel { label: w.to_string(), at })
    }

    pub fn of(q: &'a FiniteQuantale) -> Self {
        Labels { index: q.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect() }
    }
}

/// Parses a `.quant` source and builds the carrier. Lattice errors from the
/// builder are passed through unchanged.
pub fn parse_quant(text: &str) -> Result<FiniteQuantale> {
    let lines = tokenize(text);
    let mut it = lines.iter().peekable();
    let eof = |expected: &str| Error::Syntax {
        at: Span { line: text.lines().count() + 1, col: 1 },
        expected: expected.to_string(),
        found: "end of input".into(),
    };

    let head = it.next().ok_or_else(|| eof("`quantale`"))?;
    if head.word(0) != Some("quantale") {
        return Err(head.unexpected(0, "`quantale`".into()));
    }
    let name = head.expect_word(1, "a quantale name")?;
    head.expect_end(2)?;

    let decl = it.next().ok_or_else(|| eof("`elements`"))?;
    if decl.word(0) != Some("elements") {
        return Err(decl.unexpected(0, "`elements`".into()));
    }
    decl.expect(1, Tok::Colon)?;
    let mut labels: Vec<String> = Vec::new();
    let mut index = HashMap::new();
    for k in 2..decl.toks.len() {
        let w = decl.expect_word(k, "an element label")?;
        if index.insert(w, labels.len()).is_some() {
            return Err(Error::DuplicateLabel { label: w.to_string(), at: Some(decl.span(k)) });
        }
        labels.push(w.to_string());
    }
    if labels.is_empty() {
        return Err(decl.unexpected(2, "an element label".into()));
    }
    let n = labels.len();
    let labels_ix = Labels { index };

    let mut order = Vec::new();
    let mut line = it.next().ok_or_else(|| eof("`order:` or `mul:`"))?;
    if line.is_section("order") {
        loop {
            line = it.next().ok_or_else(|| eof("an order line or `mul:`"))?;
            if line.is_section("mul") {
                break;
            }
            let mut prev = labels_ix.lookup(line, 0)?;
            let mut k = 1;
            loop {
                line.expect(k, Tok::Leq)?;
                let next = labels_ix.lookup(line, k + 1)?;
                order.push((prev, next));
                prev = next;
                k += 2;
                if k >= line.toks.len() {
                    break;
                }
            }
        }
    } else if !line.is_section("mul") {
        return Err(line.unexpected(0, "`order:` or `mul:`".into()));
    }
    let mul_at = line.span(0);

    let mut rows: Vec<Option<Vec<Elem>>> = vec![None; n];
    loop {
        let line = it.next().ok_or_else(|| eof("a mul row or `end`"))?;
        if line.word(0) == Some("end") && line.toks.len() == 1 {
            break;
        }
        let x = labels_ix.lookup(line, 0)?;
        line.expect(1, Tok::Colon)?;
        if rows[x].is_some() {
            return Err(line.unexpected(0, "a label whose row is not yet given".into()));
        }
        let found = line.toks.len() - 2;
        if found != n {
            let at = line.span(2 + found.min(n));
            return Err(Error::RowArity { at, what: "entries in the row", expected: n, found });
        }
        let row = (2..line.toks.len()).map(|k| labels_ix.lookup(line, k)).collect::<Result<_>>()?;
        rows[x] = Some(row);
    }
    if let Some(extra) = it.next() {
        return Err(extra.unexpected(0, "end of input after `end`".into()));
    }
    let given = rows.iter().filter(|r| r.is_some()).count();
    if given != n {
        return Err(Error::RowArity { at: mul_at, what: "mul rows", expected: n, found: given });
    }
    let mul = rows.into_iter().map(|r| r.expect("all rows present")).collect();
    FiniteQuantale::build(name, labels, &order, mul)
}

/// Canonical text: elements in index order, the covering relation as the
/// order section, mul rows in index order with aligned columns.
pub fn write_quant(q: &FiniteQuantale) -> String {
    let mut out = String::new();
    out.push_str(&format!("quantale {}\n", token(q.name())));
    let labels: Vec<&str> = q.labels().iter().map(String::as_str).collect();
    out.push_str(&format!("elements: {}\n", labels.join(" ")));
    let covers = q.covers();
    if !covers.is_empty() {
        out.push_str("order:\n");
        for (x, y) in covers {
            out.push_str(&format!("  {} <= {}\n", labels[x], labels[y]));
        }
    }
    out.push_str("mul:\n");
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    for x in q.elements() {
        let mut line = format!("  {}", pad(&format!("{}:", labels[x]), width + 1));
        for y in q.elements() {
            line.push(' ');
            line.push_str(&pad(labels[q.mul(x, y)], width));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn pad(s: &str, width: usize) -> String {
    let len = s.chars().count();
    format!("{s}{}", " ".repeat(width.saturating_sub(len)))
}

/// Names may come from generators; keep them to one token.
fn token(name: &str) -> String {
    let t: String = name
        .chars()
        .map(|c| if c.is_whitespace() || c == ':' || c == '#' { '_' } else { c })
        .collect();
    if t.is_empty() {
        "unnamed".into()
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bundled, Generator};

    const Q4: &str = "quantale q4
elements: bot a b top
order:
  bot <= a
  bot <= b
  a <= top
  b <= top
mul:
  bot: bot bot bot bot
  a:   bot a   bot a
  b:   bot bot b   b
  top: bot a   b   top
end
";

    #[test]
    fn q4_parses_to_bundled() {
        assert_eq!(parse_quant(Q4).unwrap(), bundled::q4());
    }

    #[test]
    fn q4_writes_to_the_reference_text() {
        assert_eq!(write_quant(&bundled::q4()), Q4);
    }

    #[test]
    fn round_trips() {
        let mut cases = vec![bundled::q4(), bundled::l3(), bundled::trivial(), bundled::m3()];
        cases.push(Generator::PowerSet(3).generate().unwrap());
        cases.push(crate::ideal_quantale(&bundled::m3()).unwrap().into_quantale());
        for q in cases {
            let text = write_quant(&q);
            let back = parse_quant(&text).unwrap();
            assert_eq!(back, q, "{text}");
            assert_eq!(write_quant(&back), text);
        }
    }

    #[test]
    fn comments_chains_and_any_row_order() {
        let src = "# header\nquantale c # trailing\nelements: 0 1 2\norder:\n 0 <= 1 <= 2\nmul:\n2: 0 1 2\n0: 0 0 0\n1: 0 0 1\nend\n";
        let q = parse_quant(src).unwrap();
        assert_eq!(q.size(), 3);
        assert_eq!(q.mul(1, 1), 0);
        assert!(q.leq(0, 2));
    }

    #[test]
    fn missing_row_is_row_arity_at_mul() {
        let src = Q4.replace("  b:   bot bot b   b\n", "");
        match parse_quant(&src).unwrap_err() {
            Error::RowArity { at, what: "mul rows", expected: 4, found: 3 } => assert_eq!(at.line, 8),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn short_row_is_row_arity() {
        let src = Q4.replace("a:   bot a   bot a", "a:   bot a   bot");
        assert!(matches!(
            parse_quant(&src).unwrap_err(),
            Error::RowArity { what: "entries in the row", expected: 4, found: 3, .. }
        ));
    }

    #[test]
    fn undeclared_label_has_span() {
        let src = Q4.replace("  a <= top", "  x1 <= x9");
        assert_eq!(
            parse_quant(&src).unwrap_err(),
            Error::UndeclaredLabel { label: "x1".into(), at: Span { line: 6, col: 3 } }
        );
    }

    #[test]
    fn duplicate_label_has_span() {
        let src = Q4.replace("elements: bot a b top", "elements: bot a a top");
        assert_eq!(
            parse_quant(&src).unwrap_err(),
            Error::DuplicateLabel { label: "a".into(), at: Some(Span { line: 2, col: 17 }) }
        );
    }

    #[test]
    fn syntax_errors_name_expected_tokens() {
        let err = parse_quant("quantale q\nelements bot\n").unwrap_err();
        match err {
            Error::Syntax { at, expected, found } => {
                assert_eq!(at, Span { line: 2, col: 10 });
                assert_eq!(expected, "`:`");
                assert_eq!(found, "`bot`");
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_quant("").unwrap_err(), Error::Syntax { .. }));
        let no_end = Q4.replace("end\n", "");
        assert!(matches!(parse_quant(&no_end).unwrap_err(), Error::Syntax { found, .. } if found == "end of input"));
    }

    #[test]
    fn build_errors_pass_through() {
        let src = "quantale v\nelements: x y z\norder:\n x <= y\n x <= z\nmul:\nx: x x x\ny: x y x\nz: x x z\nend\n";
        assert!(matches!(parse_quant(src).unwrap_err(), Error::NotALattice(..) | Error::MissingBound(_)));
    }
}
