//! Function literals: named primitives, `tt:<hex>/<arity>` tables, and a
//! small formula grammar (`'` complement, juxtaposition for AND, `^` for
//! XOR, `+` for OR).

use crate::boolfn::{primitives, TruthTable, MAX_ARITY};
use crate::convenience::s23_plus_and5;
use crate::error::{Error, Result};
use crate::transient::vertex_bit;

/// Resolves a function literal. `arity_hint` supplies the arity for bare
/// primitive names like `OR`; names may also carry a suffix (`XOR3`).
pub fn parse_function(literal: &str, arity_hint: Option<usize>) -> Result<TruthTable> {
    let s = literal.trim();
    if s.starts_with("tt:") {
        return TruthTable::parse_literal(s);
    }
    if s == "s23and5" {
        return Ok(s23_plus_and5());
    }
    if let Some(t) = parse_primitive(s, arity_hint)? {
        return Ok(t);
    }
    parse_expression(s)
}

fn parse_primitive(s: &str, arity_hint: Option<usize>) -> Result<Option<TruthTable>> {
    let upper = s.to_ascii_uppercase();
    let (name, suffix) = match upper.find(|c: char| c.is_ascii_digit()) {
        Some(pos) => upper.split_at(pos),
        None => (upper.as_str(), ""),
    };
    const NAMES: [&str; 7] = ["NOT", "AND", "OR", "XOR", "NAND", "NOR", "XNOR"];
    if !NAMES.contains(&name) || !suffix.chars().all(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let arity = if suffix.is_empty() {
        None
    } else {
        Some(suffix.parse::<usize>().map_err(|_| Error::InvalidFunction {
            literal: s.to_string(),
            reason: "bad arity suffix".into(),
        })?)
    };
    let build = |default: usize| arity.or(arity_hint).unwrap_or(default);
    let table = match name {
        "NOT" => {
            let a = build(1);
            if a != 1 {
                return Err(Error::InvalidFunction {
                    literal: s.to_string(),
                    reason: "NOT takes exactly one input".into(),
                });
            }
            Some(primitives::not())
        }
        "AND" => Some(primitives::and(build(2))?),
        "OR" => Some(primitives::or(build(2))?),
        "XOR" => Some(primitives::xor(build(2))?),
        "NAND" => Some(primitives::nand(build(2))?),
        "NOR" => Some(primitives::nor(build(2))?),
        "XNOR" => Some(primitives::xnor(build(2))?),
        _ => None,
    };
    Ok(table)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Var(String),
    Zero,
    One,
    Plus,
    Caret,
    Prime,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let bad = |reason: String| Error::InvalidFunction {
        literal: s.to_string(),
        reason,
    };
    let mut tokens = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            ' ' | '\t' | '*' | '.' => {}
            '+' => tokens.push(Token::Plus),
            '^' => tokens.push(Token::Caret),
            '\'' => tokens.push(Token::Prime),
            '(' => tokens.push(Token::LParen),
            ')' => tokens.push(Token::RParen),
            '0' => tokens.push(Token::Zero),
            '1' => tokens.push(Token::One),
            'a'..='z' => {
                let mut name = c.to_string();
                while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                    name.push(chars.next().unwrap());
                }
                tokens.push(Token::Var(name));
            }
            _ => return Err(bad(format!("unexpected character {c:?}"))),
        }
    }
    Ok(tokens)
}

#[derive(Debug)]
enum Ast {
    Var(usize),
    Const(bool),
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    Xor(Box<Ast>, Box<Ast>),
}

impl Ast {
    fn eval(&self, point: usize, arity: usize) -> bool {
        match self {
            Ast::Var(i) => vertex_bit(point, *i, arity),
            Ast::Const(b) => *b,
            Ast::Not(a) => !a.eval(point, arity),
            Ast::And(a, b) => a.eval(point, arity) && b.eval(point, arity),
            Ast::Or(a, b) => a.eval(point, arity) || b.eval(point, arity),
            Ast::Xor(a, b) => a.eval(point, arity) ^ b.eval(point, arity),
        }
    }
}

/// Maps variable names to 0-based indices. Numbered variables (`x1`) use
/// their index directly; plain letters are assigned positions in
/// alphabetical order. Mixing the two styles is rejected.
fn assign_variables(literal: &str, tokens: &[Token]) -> Result<(std::collections::HashMap<String, usize>, usize)> {
    let bad = |reason: &str| Error::InvalidFunction {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    let mut numbered = Vec::new();
    let mut letters = std::collections::BTreeSet::new();
    for t in tokens {
        if let Token::Var(name) = t {
            if name.len() > 1 {
                if !name.starts_with('x') {
                    return Err(bad("numbered variables must be written x1..x8"));
                }
                let idx: usize = name[1..].parse().map_err(|_| bad("bad variable index"))?;
                if idx == 0 || idx > MAX_ARITY {
                    return Err(bad("variable index out of range"));
                }
                numbered.push((name.clone(), idx - 1));
            } else {
                letters.insert(name.clone());
            }
        }
    }
    if !numbered.is_empty() && !letters.is_empty() {
        return Err(bad("cannot mix numbered and letter variables"));
    }
    let mut map = std::collections::HashMap::new();
    let arity;
    if !numbered.is_empty() {
        arity = numbered.iter().map(|(_, i)| i + 1).max().unwrap();
        for (name, idx) in numbered {
            map.insert(name, idx);
        }
    } else {
        arity = letters.len();
        for (pos, name) in letters.into_iter().enumerate() {
            map.insert(name, pos);
        }
    }
    if arity == 0 {
        return Err(bad("no variables; use tt:<hex>/<arity> for constants"));
    }
    Ok((map, arity))
}

struct Parser<'a> {
    literal: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    vars: std::collections::HashMap<String, usize>,
}

impl<'a> Parser<'a> {
    fn bad(&self, reason: &str) -> Error {
        Error::InvalidFunction {
            literal: self.literal.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // or := xor ('+' xor)*
    fn or_expr(&mut self) -> Result<Ast> {
        let mut left = self.xor_expr()?;
        while self.peek() == Some(&Token::Plus) {
            self.next();
            let right = self.xor_expr()?;
            left = Ast::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    // xor := term ('^' term)*
    fn xor_expr(&mut self) -> Result<Ast> {
        let mut left = self.term()?;
        while self.peek() == Some(&Token::Caret) {
            self.next();
            let right = self.term()?;
            left = Ast::Xor(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    // term := factor+  (juxtaposition = AND)
    fn term(&mut self) -> Result<Ast> {
        let mut left = self.factor()?;
        while matches!(
            self.peek(),
            Some(Token::Var(_)) | Some(Token::Zero) | Some(Token::One) | Some(Token::LParen)
        ) {
            let right = self.factor()?;
            left = Ast::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    // factor := atom "'"*
    fn factor(&mut self) -> Result<Ast> {
        let mut a = self.atom()?;
        while self.peek() == Some(&Token::Prime) {
            self.next();
            a = Ast::Not(Box::new(a));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.next() {
            Some(Token::Var(name)) => Ok(Ast::Var(self.vars[&name])),
            Some(Token::Zero) => Ok(Ast::Const(false)),
            Some(Token::One) => Ok(Ast::Const(true)),
            Some(Token::LParen) => {
                let inner = self.or_expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.bad("missing closing parenthesis")),
                }
            }
            other => Err(self.bad(&format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expression(s: &str) -> Result<TruthTable> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::InvalidFunction {
            literal: s.to_string(),
            reason: "empty expression".into(),
        });
    }
    let (vars, arity) = assign_variables(s, &tokens)?;
    let mut parser = Parser {
        literal: s,
        tokens,
        pos: 0,
        vars,
    };
    let ast = parser.or_expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.bad("trailing input after expression"));
    }
    TruthTable::from_fn(arity, |point| ast.eval(point, arity))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_from_fixtures() {
        let f = parse_function("x1+x2'", None).unwrap();
        assert_eq!(f.arity(), 2);
        assert!(f.evaluate(&[false, false]).unwrap());
        assert!(!f.evaluate(&[false, true]).unwrap());

        let g = parse_function("(x1+x2')'", None).unwrap();
        for i in 0..4 {
            assert_eq!(g.value(i), !f.value(i));
        }

        let maj = parse_function("x1x2+x2x3+x3x1", None).unwrap();
        assert_eq!(maj.arity(), 3);
        assert!(maj.evaluate(&[true, true, false]).unwrap());
        assert!(!maj.evaluate(&[true, false, false]).unwrap());
    }

    #[test]
    fn letter_variables_compact() {
        let f = parse_function("x'z", None).unwrap();
        assert_eq!(f.arity(), 2);
        assert!(f.evaluate(&[false, true]).unwrap());
        assert!(!f.evaluate(&[true, true]).unwrap());
    }

    #[test]
    fn named_primitives() {
        assert_eq!(
            parse_function("XOR3", None).unwrap(),
            primitives::xor(3).unwrap()
        );
        assert_eq!(
            parse_function("or", Some(4)).unwrap(),
            primitives::or(4).unwrap()
        );
        assert_eq!(parse_function("NOT", None).unwrap(), primitives::not());
        assert!(parse_function("NOT3", None).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_function("x1 +", None).is_err());
        assert!(parse_function("(x1", None).is_err());
        assert!(parse_function("x1 + y", None).is_err());
        assert!(parse_function("x9", None).is_err());
        assert!(parse_function("", None).is_err());
    }

    #[test]
    fn s23and5_alias() {
        assert_eq!(parse_function("s23and5", None).unwrap().arity(), 5);
    }
}
