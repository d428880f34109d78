//! The line-oriented algebra-definition format and the matrix-list format.
//!
//! ```text
//! # a comment
//! algebra sl2
//! field F 5
//! basis e f h
//! bracket e f = h
//! bracket h e = 2*e
//! bracket h f = -2*f
//! ```
//!
//! Unlisted basis pairs have zero bracket; listing both orders of a pair is
//! an error, and a self-bracket may only be written as 0.

use std::fmt;

use modlie::field::{FieldElement, FieldSpec};
use modlie::liealg::{BracketEntry, LieAlgebra};
use modlie::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Grammar errors carry a line; validation errors come from the algebra
/// constructor after a grammatically clean read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraFileError {
    Grammar(ParseError),
    Invalid(modlie::Error),
}

impl fmt::Display for AlgebraFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraFileError::Grammar(e) => write!(f, "{e}"),
            AlgebraFileError::Invalid(e) => write!(f, "invalid algebra: {e}"),
        }
    }
}

impl std::error::Error for AlgebraFileError {}

impl From<ParseError> for AlgebraFileError {
    fn from(e: ParseError) -> Self {
        AlgebraFileError::Grammar(e)
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn grammar(line: usize, message: impl Into<String>) -> AlgebraFileError {
    AlgebraFileError::Grammar(err(line, message))
}

/// A parsed algebra file: the name plus the validated algebra.
#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: LieAlgebra,
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, AlgebraFileError> {
    let mut name: Option<String> = None;
    let mut spec: Option<FieldSpec> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut entries: Vec<BracketEntry> = Vec::new();
    let mut seen_pairs: Vec<(String, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "algebra" => {
                if name.is_some() {
                    return Err(grammar(lineno, "duplicate `algebra` line"));
                }
                let n = words.next().ok_or_else(|| grammar(lineno, "missing algebra name"))?;
                if words.next().is_some() {
                    return Err(grammar(lineno, "trailing tokens after algebra name"));
                }
                name = Some(n.to_string());
            }
            "field" => {
                if spec.is_some() {
                    return Err(grammar(lineno, "duplicate `field` line"));
                }
                let kind = words.next().ok_or_else(|| grammar(lineno, "missing field kind"))?;
                spec = Some(match kind {
                    "Q" => FieldSpec::rationals(),
                    "F" => {
                        let p: u64 = words
                            .next()
                            .ok_or_else(|| grammar(lineno, "missing prime after `field F`"))?
                            .parse()
                            .map_err(|_| grammar(lineno, "prime must be a positive integer"))?;
                        FieldSpec::prime(p).map_err(|e| grammar(lineno, e.to_string()))?
                    }
                    other => return Err(grammar(lineno, format!("unknown field kind `{other}`"))),
                });
                if words.next().is_some() {
                    return Err(grammar(lineno, "trailing tokens after field"));
                }
            }
            "basis" => {
                if labels.is_some() {
                    return Err(grammar(lineno, "duplicate `basis` line"));
                }
                let ids: Vec<String> = words.map(str::to_string).collect();
                if ids.is_empty() {
                    return Err(grammar(lineno, "basis line needs at least one identifier"));
                }
                for (i, id) in ids.iter().enumerate() {
                    if ids[..i].contains(id) {
                        return Err(grammar(lineno, format!("duplicate basis label `{id}`")));
                    }
                }
                labels = Some(ids);
            }
            "bracket" => {
                let spec = spec.ok_or_else(|| grammar(lineno, "`bracket` before `field`"))?;
                let labels = labels
                    .as_ref()
                    .ok_or_else(|| grammar(lineno, "`bracket` before `basis`"))?;
                let rest = line["bracket".len()..].trim();
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| grammar(lineno, "bracket line needs `= <rhs>`"))?;
                let lhs: Vec<&str> = lhs.split_whitespace().collect();
                let [left, right] = lhs[..] else {
                    return Err(grammar(lineno, "bracket needs exactly two basis labels"));
                };
                for id in [left, right] {
                    if !labels.iter().any(|l| l == id) {
                        return Err(grammar(lineno, format!("unknown basis label `{id}`")));
                    }
                }
                let terms = parse_rhs(spec, labels, rhs.trim(), lineno)?;
                if left == right {
                    if !terms.is_empty() {
                        return Err(grammar(lineno, "self-bracket must be 0"));
                    }
                    continue;
                }
                let key = if left < right {
                    (left.to_string(), right.to_string())
                } else {
                    (right.to_string(), left.to_string())
                };
                if seen_pairs.contains(&key) {
                    return Err(grammar(
                        lineno,
                        format!("bracket listed for both orderings of ({left}, {right})"),
                    ));
                }
                seen_pairs.push(key);
                entries.push(BracketEntry {
                    left: left.to_string(),
                    right: right.to_string(),
                    terms,
                });
            }
            other => return Err(grammar(lineno, format!("unknown directive `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| grammar(0, "missing `algebra` line"))?;
    let spec = spec.ok_or_else(|| grammar(0, "missing `field` line"))?;
    let labels = labels.ok_or_else(|| grammar(0, "missing `basis` line"))?;
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let algebra = LieAlgebra::from_bracket_table(spec, &label_refs, &entries)
        .map_err(AlgebraFileError::Invalid)?;
    Ok(AlgebraFile { name, algebra })
}

/// `0` or signed terms `[coeff *] id` joined by `+` / `-`.
fn parse_rhs(
    spec: FieldSpec,
    labels: &[String],
    rhs: &str,
    lineno: usize,
) -> Result<Vec<(FieldElement, String)>, ParseError> {
    if rhs.is_empty() {
        return Err(err(lineno, "empty bracket right-hand side"));
    }
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut negate = false;
    let mut expecting_term = true;
    for token in rhs.split_whitespace() {
        match token {
            "+" | "-" if !expecting_term => {
                negate = token == "-";
                expecting_term = true;
            }
            _ if expecting_term => {
                let (coeff_text, label) = match token.split_once('*') {
                    Some((c, l)) => (Some(c), l),
                    None => (None, token),
                };
                let label = label.trim();
                if !labels.iter().any(|l| l == label) {
                    return Err(err(lineno, format!("unknown basis label `{label}`")));
                }
                let mut coeff = match coeff_text {
                    Some(c) => spec
                        .parse_scalar(c)
                        .map_err(|e| err(lineno, format!("bad coefficient `{c}`: {e}")))?,
                    None => spec.one(),
                };
                if negate {
                    coeff = -&coeff;
                }
                terms.push((coeff, label.to_string()));
                negate = false;
                expecting_term = false;
            }
            _ => return Err(err(lineno, format!("unexpected token `{token}`"))),
        }
    }
    if expecting_term {
        return Err(err(lineno, "right-hand side ends with a dangling operator"));
    }
    Ok(terms)
}

/// Serializes an algebra in the same format; parse(emit(L)) rebuilds the
/// identical structure constants.
pub fn emit_algebra_file(name: &str, algebra: &LieAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {name}\n"));
    match algebra.spec().modulus() {
        Some(p) => out.push_str(&format!("field F {p}\n")),
        None => out.push_str("field Q\n"),
    }
    out.push_str(&format!("basis {}\n", algebra.labels().join(" ")));
    for i in 0..algebra.dim() {
        for j in (i + 1)..algebra.dim() {
            let rhs = algebra.bracket_basis(i, j);
            if rhs.iter().all(FieldElement::is_zero) {
                continue;
            }
            let terms: Vec<String> = rhs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    if c.is_one() {
                        algebra.label(k).to_string()
                    } else {
                        format!("{c}*{}", algebra.label(k))
                    }
                })
                .collect();
            out.push_str(&format!(
                "bracket {} {} = {}\n",
                algebra.label(i),
                algebra.label(j),
                terms.join(" + ")
            ));
        }
    }
    out
}

/// One matrix per non-comment line, in the bracketed-rows syntax that
/// matrices print with: `[[1, 0], [0, -1]]`.
pub fn parse_matrix_file(spec: FieldSpec, text: &str) -> Result<Vec<Matrix>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_matrix(spec, line, lineno)?);
    }
    Ok(out)
}

pub fn parse_matrix(spec: FieldSpec, text: &str, lineno: usize) -> Result<Matrix, ParseError> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = text
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| err(lineno, "matrix must look like [[a, b], [c, d]]"))?;
    let mut rows = Vec::new();
    for row_text in inner.split("],[") {
        let mut row = Vec::new();
        for entry in row_text.split(',') {
            row.push(
                spec.parse_scalar(entry)
                    .map_err(|e| err(lineno, format!("bad entry `{entry}`: {e}")))?,
            );
        }
        rows.push(row);
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(err(lineno, "ragged matrix rows"));
    }
    Ok(Matrix::from_rows(spec, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2_FILE: &str = "\
# special linear algebra
algebra sl2
field F 5
basis e f h
bracket e f = h
bracket h e = 2*e
bracket h f = -2*f
";

    #[test]
    fn parses_sl2_file() {
        let parsed = parse_algebra_file(SL2_FILE).unwrap();
        assert_eq!(parsed.name, "sl2");
        assert_eq!(parsed.algebra.dim(), 3);
        let e = parsed.algebra.basis_element(0);
        let f = parsed.algebra.basis_element(1);
        let h = parsed.algebra.basis_element(2);
        assert_eq!(parsed.algebra.bracket(&e, &f).unwrap(), h);
    }

    #[test]
    fn self_bracket_must_be_zero() {
        let text = "algebra a\nfield F 5\nbasis e h\nbracket e e = h\n";
        match parse_algebra_file(text).unwrap_err() {
            AlgebraFileError::Grammar(e) => assert_eq!(e.line, 4),
            other => panic!("expected grammar error, got {other:?}"),
        }
        let ok = "algebra a\nfield F 5\nbasis e h\nbracket e e = 0\n";
        assert!(parse_algebra_file(ok).is_ok());
    }

    #[test]
    fn duplicate_unordered_pair_rejected() {
        let text = "algebra a\nfield F 5\nbasis e f h\nbracket e f = h\nbracket f e = h\n";
        match parse_algebra_file(text).unwrap_err() {
            AlgebraFileError::Grammar(e) => assert_eq!(e.line, 5),
            other => panic!("expected grammar error, got {other:?}"),
        }
    }

    #[test]
    fn rational_coefficients_parse() {
        let text = "algebra a\nfield Q\nbasis x y z\nbracket x y = 1/2*z - y\n";
        let parsed = parse_algebra_file(text).unwrap();
        let q = FieldSpec::rationals();
        let b = parsed.algebra.bracket_basis(0, 1);
        assert_eq!(b[2], q.from_fraction(1, 2).unwrap());
        assert_eq!(b[1], q.from_integer(-1));
    }

    #[test]
    fn emit_then_parse_round_trips() {
        let parsed = parse_algebra_file(SL2_FILE).unwrap();
        let emitted = emit_algebra_file(&parsed.name, &parsed.algebra);
        let reparsed = parse_algebra_file(&emitted).unwrap();
        assert_eq!(parsed.algebra, reparsed.algebra);
    }

    #[test]
    fn matrix_round_trip() {
        let spec = FieldSpec::rationals();
        let m = Matrix::from_i64(spec, &[&[0, 1], &[-1, 0]]);
        let text = m.to_string();
        assert_eq!(parse_matrix(spec, &text, 1).unwrap(), m);
    }

    #[test]
    fn matrix_file_with_comments() {
        let spec = FieldSpec::prime(3).unwrap();
        let text = "# action of e\n[[0, 1], [0, 0]]\n\n[[0, 0], [1, 0]]\n[[1, 0], [0, 2]]\n";
        let mats = parse_matrix_file(spec, text).unwrap();
        assert_eq!(mats.len(), 3);
        assert_eq!(mats[2], Matrix::from_i64(spec, &[&[1, 0], &[0, -1]]));
    }
}
