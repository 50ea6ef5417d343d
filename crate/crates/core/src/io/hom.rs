//! Homomorphism files.
//!
//! ```text
//! hom split : q4 -> c2
//! map:
//!   bot -> bot
//!   a -> top
//!   b -> bot
//!   top -> top
//! end
//! ```
//!
//! The trailing `end` is optional. The map must be total.

use std::sync::Arc;

use super::quant::{tokenize, Labels, Tok};
use crate::error::{Error, Result, Span};
use crate::hom::QuantaleHom;
use crate::quantale::FiniteQuantale;

/// A parsed hom file whose carriers are not yet loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSource {
    pub name: String,
    pub source: String,
    pub target: String,
    /// `(x, span of x, y, span of y)` in file order.
    pub pairs: Vec<(String, Span, String, Span)>,
    map_at: Span,
}

pub fn parse_hom(text: &str) -> Result<HomSource> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let eof = |expected: &str| Error::Syntax {
        at: Span { line: text.lines().count() + 1, col: 1 },
        expected: expected.to_string(),
        found: "end of input".into(),
    };
    let head = it.next().ok_or_else(|| eof("`hom`"))?;
    if head.word(0) != Some("hom") {
        return Err(head.unexpected(0, "`hom`".into()));
    }
    let name = head.expect_word(1, "a hom name")?;
    head.expect(2, Tok::Colon)?;
    let source = head.expect_word(3, "a source quantale")?;
    head.expect(4, Tok::Arrow)?;
    let target = head.expect_word(5, "a target quantale")?;
    head.expect_end(6)?;

    let section = it.next().ok_or_else(|| eof("`map:`"))?;
    if !section.is_section("map") {
        return Err(section.unexpected(0, "`map:`".into()));
    }
    let mut pairs = Vec::new();
    for line in it.by_ref() {
        if line.word(0) == Some("end") && line.toks.len() == 1 {
            break;
        }
        let x = line.expect_word(0, "a source label or `end`")?;
        line.expect(1, Tok::Arrow)?;
        let y = line.expect_word(2, "a target label")?;
        line.expect_end(3)?;
        pairs.push((x.to_string(), line.span(0), y.to_string(), line.span(2)));
    }
    if let Some(extra) = it.next() {
        return Err(extra.unexpected(0, "end of input after `end`".into()));
    }
    Ok(HomSource {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        pairs,
        map_at: section.span(0),
    })
}

impl HomSource {
    /// Checks labels and totality against the loaded carriers, then the four
    /// homomorphism conditions.
    pub fn resolve(&self, source: Arc<FiniteQuantale>, target: Arc<FiniteQuantale>) -> Result<QuantaleHom> {
        let src = Labels::of(&source);
        let dst = Labels::of(&target);
        let mut map = vec![None; source.size()];
        for (x, at, y, y_at) in &self.pairs {
            let xi = src.get(x, *at)?;
            let yi = dst.get(y, *y_at)?;
            if map[xi].replace(yi).is_some() {
                return Err(Error::Syntax {
                    at: *at,
                    expected: "a source label not yet mapped".into(),
                    found: format!("`{x}`"),
                });
            }
        }
        let given = map.iter().filter(|m| m.is_some()).count();
        if given != source.size() {
            return Err(Error::RowArity { at: self.map_at, what: "map lines", expected: source.size(), found: given });
        }
        let map = map.into_iter().map(|m| m.expect("total")).collect();
        QuantaleHom::new(self.name.clone(), source, target, map)
    }
}

pub fn write_hom(h: &QuantaleHom) -> String {
    let mut out = format!("hom {} : {} -> {}\nmap:\n", h.name(), h.source().name(), h.target().name());
    let width = h.source().labels().iter().map(|l| l.chars().count()).max().unwrap_or(0);
    for x in h.source().elements() {
        let l = h.source().label(x);
        let pad = " ".repeat(width - l.chars().count());
        out.push_str(&format!("  {l}{pad} -> {}\n", h.target().label(h.apply(x))));
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bundled;

    const SPLIT: &str = "hom split : q4 -> c2\nmap:\n  bot -> bot\n  a   -> top\n  b   -> bot\n  top -> top\nend\n";

    fn carriers() -> (Arc<FiniteQuantale>, Arc<FiniteQuantale>) {
        (Arc::new(bundled::q4()), Arc::new(bundled::c2()))
    }

    #[test]
    fn parses_and_resolves() {
        let src = parse_hom(SPLIT).unwrap();
        assert_eq!((src.source.as_str(), src.target.as_str()), ("q4", "c2"));
        let (q, c) = carriers();
        let h = src.resolve(q, c).unwrap();
        assert_eq!(h.map(), &[0, 1, 0, 1]);
        assert_eq!(write_hom(&h), SPLIT);
    }

    #[test]
    fn partial_map_is_rejected() {
        let text = SPLIT.replace("  b   -> bot\n", "");
        let (q, c) = carriers();
        let err = parse_hom(&text).unwrap().resolve(q, c).unwrap_err();
        assert!(matches!(err, Error::RowArity { what: "map lines", expected: 4, found: 3, .. }));
    }

    #[test]
    fn unknown_target_label_points_at_it() {
        let text = SPLIT.replace("a   -> top", "a   -> one");
        let (q, c) = carriers();
        let err = parse_hom(&text).unwrap().resolve(q, c).unwrap_err();
        assert_eq!(err, Error::UndeclaredLabel { label: "one".into(), at: Span { line: 4, col: 10 } });
    }

    #[test]
    fn invalid_map_fails_the_conditions() {
        let text = SPLIT.replace("top -> top", "top -> bot");
        let (q, c) = carriers();
        assert!(matches!(parse_hom(&text).unwrap().resolve(q, c).unwrap_err(), Error::HomInvalid { .. }));
    }

    #[test]
    fn header_syntax() {
        assert!(matches!(parse_hom("hom h q4 -> c2\nmap:\n").unwrap_err(), Error::Syntax { .. }));
    }
}
