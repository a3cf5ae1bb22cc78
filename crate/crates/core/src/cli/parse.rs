//! Recursive-descent parsers for group specs and element literals.
//!
//! ```text
//! expr := atom ("x" atom)*
//! atom := "C" int | "D" int | "A" int | "S" int | "PSL2(" int ")"
//!       | "perm[" perm ("," perm)* "]" | "proj(" int ")[" matrix ("," matrix)* "]"
//! perm := "()" | cycle+        cycle := "(" int ((","|" ") int)* ")"
//! matrix := "[[" int "," int "],[" int "," int "]]"
//! ```
//!
//! Whitespace is ignored between tokens. Errors carry the byte offset.

use thiserror::Error;

use crate::group::{is_prime, Element, ElementId, FactorKind, FiniteGroup, GroupSpec, Permutation, ProjMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return match self.peek() {
                Some(c) => self.err(format!("expected an integer, found `{c}`")),
                None => self.err("expected an integer, found end of input"),
            };
        }
        match self.text[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.err("integer out of range"),
        }
    }

    fn positive(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).ok().filter(|&v| v > 0).ok_or(ParseError { offset: at, message: format!("expected a positive integer, found {v}") })
    }
}

/// Parses the group-spec DSL, e.g. `D5xC3`, `PSL2(11)`, `perm[(1 2),(1 2 3)]`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut c = Cursor::new(text);
    let mut spec = atom(&mut c)?;
    while c.eat('x') {
        let rhs = atom(&mut c)?;
        spec = GroupSpec::product(spec, rhs);
    }
    if !c.at_end() {
        let found = c.peek().unwrap_or(' ');
        return c.err(format!("unexpected `{found}`; factors are joined with `x`"));
    }
    Ok(spec)
}

fn atom(c: &mut Cursor) -> Result<GroupSpec, ParseError> {
    if c.eat_keyword("PSL2") {
        c.expect('(')?;
        let at = c.pos;
        let p = c.positive()?;
        if !is_prime(p as u64) {
            return Err(ParseError { offset: at, message: format!("PSL2 needs a prime, {p} is not prime") });
        }
        c.expect(')')?;
        return Ok(GroupSpec::Psl2(p));
    }
    if c.eat_keyword("perm") {
        c.expect('[')?;
        let mut gens = vec![cycles(c)?];
        while c.eat(',') {
            gens.push(cycles(c)?);
        }
        c.expect(']')?;
        let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1).max(1) as usize;
        let perms = gens
            .iter()
            .map(|g| Permutation::from_cycles(degree, g).expect("points are positive and cycles checked"))
            .collect();
        return Ok(GroupSpec::PermGens(perms));
    }
    if c.eat_keyword("proj") {
        c.expect('(')?;
        let at = c.pos;
        let p = c.positive()?;
        if !is_prime(p as u64) {
            return Err(ParseError { offset: at, message: format!("{p} is not prime") });
        }
        c.expect(')')?;
        c.expect('[')?;
        let mut matrices = vec![matrix(c)?];
        while c.eat(',') {
            matrices.push(matrix(c)?);
        }
        c.expect(']')?;
        return Ok(GroupSpec::ProjMatGens { p, matrices });
    }
    let ctor: fn(u32) -> GroupSpec = match c.peek() {
        Some('C') => GroupSpec::Cyclic,
        Some('D') => GroupSpec::Dihedral,
        Some('A') => GroupSpec::Alternating,
        Some('S') => GroupSpec::Symmetric,
        Some(other) => return c.err(format!("expected a group (C, D, A, S, PSL2, perm, proj), found `{other}`")),
        None => return c.err("expected a group, found end of input"),
    };
    c.pos += 1;
    Ok(ctor(c.positive()?))
}

/// One permutation as a product of cycles; `()` is the identity.
fn cycles(c: &mut Cursor) -> Result<Vec<Vec<u32>>, ParseError> {
    let mut out = Vec::new();
    if c.peek() != Some('(') {
        return c.err("expected `(` to start a cycle");
    }
    while c.peek() == Some('(') {
        let start = c.pos;
        c.expect('(')?;
        let mut cycle = Vec::new();
        while c.peek() != Some(')') {
            if !cycle.is_empty() {
                c.eat(',');
            }
            cycle.push(c.positive()?);
        }
        c.expect(')')?;
        let mut sorted = cycle.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != cycle.len() {
            return Err(ParseError { offset: start, message: "repeated point in cycle".into() });
        }
        if !cycle.is_empty() {
            out.push(cycle);
        }
    }
    Ok(out)
}

fn matrix(c: &mut Cursor) -> Result<[i64; 4], ParseError> {
    c.expect('[')?;
    c.expect('[')?;
    let a = c.int()?;
    c.expect(',')?;
    let b = c.int()?;
    c.expect(']')?;
    c.expect(',')?;
    c.expect('[')?;
    let cc = c.int()?;
    c.expect(',')?;
    let d = c.int()?;
    c.expect(']')?;
    c.expect(']')?;
    Ok([a, b, cc, d])
}

fn factor_literal(c: &mut Cursor, kind: FactorKind) -> Result<Element, ParseError> {
    let start = {
        c.skip_ws();
        c.pos
    };
    match kind {
        FactorKind::Residue(m) => {
            let v = c.int()?;
            Ok(Element::Residue { value: v.rem_euclid(m as i64) as u32, modulus: m })
        }
        FactorKind::Klein => {
            for (bits, name) in [(3u8, "ab"), (0, "e"), (1, "a"), (2, "b")] {
                if c.eat_keyword(name) {
                    return Ok(Element::Klein(bits));
                }
            }
            c.err("expected one of e, a, b, ab")
        }
        FactorKind::Perm(degree) => {
            if c.eat_keyword("id") || c.eat_keyword("e") {
                return Ok(Element::Perm(Permutation::identity(degree)));
            }
            let cyc = cycles(c)?;
            match Permutation::from_cycles(degree, &cyc) {
                Some(p) => Ok(Element::Perm(p)),
                None => Err(ParseError { offset: start, message: format!("points must lie in 1..={degree}") }),
            }
        }
        FactorKind::Matrix(p) => {
            let m = matrix(c)?;
            match ProjMatrix::new(p, m) {
                Some(x) => Ok(Element::Matrix(x)),
                None => Err(ParseError { offset: start, message: format!("matrix is singular mod {p}") }),
            }
        }
    }
}

/// Parses an element literal of `group` and returns its id. Products take
/// a tuple `(x, y, ...)` with one entry per direct factor.
pub fn parse_element(group: &FiniteGroup, text: &str) -> Result<ElementId, ParseError> {
    let mut c = Cursor::new(text);
    let kinds = group.factor_kinds().to_vec();
    let element = if kinds.len() == 1 {
        factor_literal(&mut c, kinds[0])?
    } else {
        c.expect('(')?;
        let mut items = Vec::new();
        for (k, kind) in kinds.iter().enumerate() {
            if k > 0 {
                c.expect(',')?;
            }
            items.push(factor_literal(&mut c, *kind)?);
        }
        c.expect(')')?;
        Element::Tuple(items)
    };
    if !c.at_end() {
        return c.err("trailing input after element");
    }
    group.lookup(&element).ok_or(ParseError { offset: 0, message: format!("{element} is not an element of {}", group.spec()) })
}

/// Parses a comma-separated list of positive integers.
pub fn parse_positive_list(text: &str) -> Result<Vec<u32>, ParseError> {
    let mut c = Cursor::new(text);
    let mut out = vec![c.positive()?];
    while c.eat(',') {
        out.push(c.positive()?);
    }
    if !c.at_end() {
        return c.err("expected `,`");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("D5xC3").unwrap(), GroupSpec::product(GroupSpec::Dihedral(5), GroupSpec::Cyclic(3)));
        assert_eq!(parse_group_spec(" PSL2( 11 ) ").unwrap(), GroupSpec::Psl2(11));
        assert_eq!(parse_group_spec("A4 x C2 x C3").unwrap().factors().len(), 3);
        let p = parse_group_spec("perm[(1 2),(1,2,3)(4 5)]").unwrap();
        assert_eq!(p.to_string(), "perm[(1 2),(1 2 3)(4 5)]");
        let m = parse_group_spec("proj(7)[[[1,1],[0,1]],[[0,-1],[1,0]]]").unwrap();
        assert_eq!(m, GroupSpec::ProjMatGens { p: 7, matrices: vec![[1, 1, 0, 1], [0, -1, 1, 0]] });
    }

    #[test]
    fn display_round_trip() {
        for s in ["C7", "D5xC3", "PSL2(7)", "A4xC4", "perm[(1 2 3),()]", "proj(5)[[[1,2],[3,4]]]"] {
            assert_eq!(parse_group_spec(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_group_spec("D5x").unwrap_err().offset, 3);
        assert_eq!(parse_group_spec("PSL2(9)").unwrap_err().offset, 5);
        assert_eq!(parse_group_spec("Q8").unwrap_err().offset, 0);
        assert_eq!(parse_group_spec("C0").unwrap_err().offset, 1);
        assert_eq!(parse_group_spec("C5 C3").unwrap_err().offset, 3);
        assert_eq!(parse_group_spec("perm[(1 1)]").unwrap_err().offset, 5);
        assert_eq!(parse_group_spec("").unwrap_err().offset, 0);
    }

    #[test]
    fn element_literals() {
        let h = build_group(&GroupSpec::Psl2(11)).unwrap();
        let x = parse_element(&h, "[[6,7],[1,5]]").unwrap();
        assert_eq!(parse_element(&h, "[[-6,-7],[-1,-5]]").unwrap(), x);
        assert!(parse_element(&h, "[[1,1],[1,1]]").is_err());
        // determinant 2 is a non-square mod 11
        assert!(parse_element(&h, "[[2,0],[0,1]]").is_err());

        let g = build_group(&parse_group_spec("PSL2(11)xC2").unwrap()).unwrap();
        let y = parse_element(&g, "([[8,6],[4,10]], 1)").unwrap();
        assert_eq!(g.name(y), "([[1,9],[6,4]], 1)");

        let a5 = build_group(&GroupSpec::Alternating(5)).unwrap();
        assert_eq!(parse_element(&a5, "()").unwrap(), 0);
        assert!(parse_element(&a5, "(1 2)").is_err());
        assert!(parse_element(&a5, "(1 2 6)").is_err());
        assert_eq!(a5.element_order(parse_element(&a5, "(1 5 3 4 2)").unwrap()), 5);

        let k = build_group(&GroupSpec::Dihedral(2)).unwrap();
        assert_eq!(k.name(parse_element(&k, "ab").unwrap()), "ab");
        let c = build_group(&GroupSpec::Cyclic(5)).unwrap();
        assert_eq!(c.name(parse_element(&c, "-1").unwrap()), "4");
    }
}
