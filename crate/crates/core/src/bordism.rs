//! A small language for 2-dimensional bordisms and its evaluation as linear
//! maps over a commutative Frobenius algebra.
//!
//! ```text
//! expr := term (';' term)*      sequential, read left to right
//! term := atom ('|' atom)*      side by side (tensor product)
//! atom := cap | cup | pants | copants | id | swap | '(' expr ')'
//! ```
//!
//! `a ; b` means "first `a`, then `b`": the outgoing circles of `a` are glued
//! to the incoming circles of `b`, so the matrix is `M(b) * M(a)`. `|` binds
//! tighter than `;`. On tensor powers the basis is ordered lexicographically
//! with the left-most circle as the most significant index.

use std::fmt;

use thiserror::Error;

use crate::frobenius::FrobeniusAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BordismError {
    #[error("SyntaxError at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("ArityMismatch in `{node}`: expected {expected} circles, found {found}")]
    ArityMismatch { node: String, expected: usize, found: usize },
    #[error("NotCommutative: closed surfaces need a commutative Frobenius algebra")]
    NotCommutative,
    #[error("DimensionMismatch: cannot compose {left} with {right}")]
    DimensionMismatch { left: String, right: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Disc, 0 -> 1: the unit.
    Cap,
    /// Disc, 1 -> 0: the counit.
    Cup,
    /// 2 -> 1: multiplication.
    Pants,
    /// 1 -> 2: comultiplication.
    Copants,
    /// Cylinder, 1 -> 1.
    Id,
    /// 2 -> 2 exchange of circles.
    Swap,
}

impl Generator {
    pub const ALL: [Generator; 6] = [Self::Cap, Self::Cup, Self::Pants, Self::Copants, Self::Id, Self::Swap];

    pub fn arity(self) -> (usize, usize) {
        match self {
            Self::Cap => (0, 1),
            Self::Cup => (1, 0),
            Self::Pants => (2, 1),
            Self::Copants => (1, 2),
            Self::Id => (1, 1),
            Self::Swap => (2, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Cap => "cap",
            Self::Cup => "cup",
            Self::Pants => "pants",
            Self::Copants => "copants",
            Self::Id => "id",
            Self::Swap => "swap",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExprKind {
    Gen(Generator),
    Seq(Box<BordismExpr>, Box<BordismExpr>),
    Par(Box<BordismExpr>, Box<BordismExpr>),
}

/// An arity-checked bordism expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BordismExpr {
    kind: ExprKind,
    inputs: usize,
    outputs: usize,
}

impl BordismExpr {
    pub fn generator(g: Generator) -> Self {
        let (inputs, outputs) = g.arity();
        Self { kind: ExprKind::Gen(g), inputs, outputs }
    }

    /// `first ; then`
    pub fn seq(first: Self, then: Self) -> Result<Self, BordismError> {
        if first.outputs != then.inputs {
            return Err(BordismError::ArityMismatch {
                node: format!("{} ; {}", Paren(&first, 1), Paren(&then, 2)),
                expected: then.inputs,
                found: first.outputs,
            });
        }
        let (inputs, outputs) = (first.inputs, then.outputs);
        Ok(Self { kind: ExprKind::Seq(Box::new(first), Box::new(then)), inputs, outputs })
    }

    pub fn par(left: Self, right: Self) -> Self {
        let (inputs, outputs) = (left.inputs + right.inputs, left.outputs + right.outputs);
        Self { kind: ExprKind::Par(Box::new(left), Box::new(right)), inputs, outputs }
    }

    pub fn kind(&self) -> &ExprKind {
        &self.kind
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn is_closed(&self) -> bool {
        self.inputs == 0 && self.outputs == 0
    }
}

impl std::str::FromStr for BordismExpr {
    type Err = BordismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl BordismExpr {
    // `;` binds loosest, then `|`, then atoms
    fn precedence(&self) -> u8 {
        match self.kind {
            ExprKind::Seq(..) => 1,
            ExprKind::Par(..) => 2,
            ExprKind::Gen(_) => 3,
        }
    }
}

// A child expression, parenthesised when its precedence is below `.1`.
struct Paren<'a>(&'a BordismExpr, u8);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for BordismExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Gen(g) => write!(f, "{}", g.name()),
            ExprKind::Seq(a, b) => write!(f, "{} ; {}", Paren(a, 1), Paren(b, 2)),
            ExprKind::Par(a, b) => write!(f, "{} | {}", Paren(a, 2), Paren(b, 3)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Word(String),
    Semi,
    Bar,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, BordismError> {
    let mut tokens = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            ';' | '|' | '(' | ')' => {
                chars.next();
                let t = match c {
                    ';' => Token::Semi,
                    '|' => Token::Bar,
                    '(' => Token::Open,
                    _ => Token::Close,
                };
                tokens.push((pos, t));
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if !c.is_ascii_alphanumeric() && c != '_' {
                        break;
                    }
                    word.push(c);
                    chars.next();
                }
                tokens.push((pos, Token::Word(word)));
            }
            other => {
                return Err(BordismError::Syntax { position: pos, message: format!("unexpected character `{other}`") });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, BordismError> {
        Err(BordismError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<BordismExpr, BordismError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Semi) {
            self.pos += 1;
            let next = self.term()?;
            acc = BordismExpr::seq(acc, next)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BordismExpr, BordismError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Bar) {
            self.pos += 1;
            let next = self.atom()?;
            acc = BordismExpr::par(acc, next);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<BordismExpr, BordismError> {
        match self.peek().cloned() {
            Some(Token::Word(w)) => match Generator::from_name(&w) {
                Some(g) => {
                    self.pos += 1;
                    Ok(BordismExpr::generator(g))
                }
                None => self.error(format!("unknown generator `{w}`")),
            },
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.error("expected a generator or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses and arity-checks a bordism expression.
pub fn parse(source: &str) -> Result<BordismExpr, BordismError> {
    let mut p = Parser { tokens: tokenize(source)?, pos: 0, end: source.len() };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// `cap ; (copants ; pants)^g ; cup`
pub fn closed_surface_expr(genus: u32) -> BordismExpr {
    let g = BordismExpr::generator;
    let mut e = g(Generator::Cap);
    for _ in 0..genus {
        e = BordismExpr::seq(e, g(Generator::Copants)).expect("1 -> 2");
        e = BordismExpr::seq(e, g(Generator::Pants)).expect("2 -> 1");
    }
    BordismExpr::seq(e, g(Generator::Cup)).expect("1 -> 0")
}

/// The value of a bordism: a matrix from `dim^inputs` to `dim^outputs`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap<T> {
    inputs: usize,
    outputs: usize,
    base_dim: usize,
    matrix: Matrix<T>,
}

impl<T: Scalar> LinearMap<T> {
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    /// The single entry of a map between empty collections of circles.
    pub fn scalar(&self) -> Option<T> {
        (self.inputs == 0 && self.outputs == 0).then(|| self.matrix[(0, 0)].clone())
    }

    fn shape(&self) -> String {
        format!("{}^{} -> {}^{}", self.base_dim, self.inputs, self.base_dim, self.outputs)
    }
}

impl<T: fmt::Display> fmt::Display for LinearMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Generator matrices for one Frobenius algebra.
pub struct Evaluator<T> {
    dim: usize,
    unit: Matrix<T>,
    counit: Matrix<T>,
    multiplication: Matrix<T>,
    comultiplication: Matrix<T>,
    identity: Matrix<T>,
    swap: Matrix<T>,
}

impl<T: Scalar> Evaluator<T> {
    pub fn new(frobenius: &FrobeniusAlgebra<T>) -> Result<Self, BordismError> {
        if !frobenius.is_commutative() {
            return Err(BordismError::NotCommutative);
        }
        let alg = frobenius.algebra();
        let d = alg.dim();
        let unit = Matrix::column(alg.unit().into_coords());
        let counit = Matrix::row_vector(frobenius.counit().to_vec());
        // column i*d + j holds e_i e_j
        let multiplication = Matrix::from_fn(d, d * d, |k, col| alg.constant(col / d, col % d, k).clone());
        // Δ(e_a) = Σ_i (e_a e_i) ⊗ e_i^∨
        let dual = frobenius.dual_basis();
        let mut comultiplication: Matrix<T> = Matrix::zeros(d * d, d);
        for a in 0..d {
            for i in 0..d {
                for k in 0..d {
                    let c = alg.constant(a, i, k);
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..d {
                        let v = comultiplication[(k * d + l, a)].clone() + c.clone() * dual[(i, l)].clone();
                        comultiplication[(k * d + l, a)] = v;
                    }
                }
            }
        }
        let swap = Matrix::from_fn(d * d, d * d, |row, col| {
            if row == (col % d) * d + col / d {
                T::one()
            } else {
                T::zero()
            }
        });
        Ok(Self { dim: d, unit, counit, multiplication, comultiplication, identity: Matrix::identity(d), swap })
    }

    pub fn generator(&self, g: Generator) -> LinearMap<T> {
        let (inputs, outputs) = g.arity();
        let matrix = match g {
            Generator::Cap => &self.unit,
            Generator::Cup => &self.counit,
            Generator::Pants => &self.multiplication,
            Generator::Copants => &self.comultiplication,
            Generator::Id => &self.identity,
            Generator::Swap => &self.swap,
        };
        LinearMap { inputs, outputs, base_dim: self.dim, matrix: matrix.clone() }
    }

    pub fn evaluate(&self, expr: &BordismExpr) -> Result<LinearMap<T>, BordismError> {
        match expr.kind() {
            ExprKind::Gen(g) => Ok(self.generator(*g)),
            ExprKind::Seq(a, b) => {
                let (ma, mb) = (self.evaluate(a)?, self.evaluate(b)?);
                let matrix = mb.matrix.checked_mul(&ma.matrix).ok_or_else(|| BordismError::DimensionMismatch {
                    left: ma.shape(),
                    right: mb.shape(),
                })?;
                Ok(LinearMap { inputs: ma.inputs, outputs: mb.outputs, base_dim: self.dim, matrix })
            }
            ExprKind::Par(a, b) => {
                let (ma, mb) = (self.evaluate(a)?, self.evaluate(b)?);
                Ok(LinearMap {
                    inputs: ma.inputs + mb.inputs,
                    outputs: ma.outputs + mb.outputs,
                    base_dim: self.dim,
                    matrix: ma.matrix.kron(&mb.matrix),
                })
            }
        }
    }
}

/// Evaluates `expr` over a commutative Frobenius algebra.
pub fn evaluate<T: Scalar>(expr: &BordismExpr, frobenius: &FrobeniusAlgebra<T>) -> Result<LinearMap<T>, BordismError> {
    Evaluator::new(frobenius)?.evaluate(expr)
}

/// Whether two bordisms with the same boundary evaluate to the same matrix.
pub fn check_relation<T: Scalar>(
    lhs: &BordismExpr,
    rhs: &BordismExpr,
    frobenius: &FrobeniusAlgebra<T>,
) -> Result<bool, BordismError> {
    for (what, l, r) in [("inputs", lhs.inputs, rhs.inputs), ("outputs", lhs.outputs, rhs.outputs)] {
        if l != r {
            return Err(BordismError::ArityMismatch { node: format!("{lhs} = {rhs} ({what})"), expected: l, found: r });
        }
    }
    let ev = Evaluator::new(frobenius)?;
    Ok(ev.evaluate(lhs)? == ev.evaluate(rhs)?)
}

/// A named pair of bordisms that must evaluate equally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

/// Unit, counit, (co)associativity, (co)commutativity, Frobenius and
/// zig-zag identities.
pub const STANDARD_RELATIONS: &[Relation] = &[
    Relation { name: "unit-left", lhs: "(cap | id) ; pants", rhs: "id" },
    Relation { name: "unit-right", lhs: "(id | cap) ; pants", rhs: "id" },
    Relation { name: "counit-left", lhs: "copants ; (cup | id)", rhs: "id" },
    Relation { name: "counit-right", lhs: "copants ; (id | cup)", rhs: "id" },
    Relation { name: "associativity", lhs: "(pants | id) ; pants", rhs: "(id | pants) ; pants" },
    Relation { name: "coassociativity", lhs: "copants ; (copants | id)", rhs: "copants ; (id | copants)" },
    Relation { name: "commutativity", lhs: "swap ; pants", rhs: "pants" },
    Relation { name: "cocommutativity", lhs: "copants ; swap", rhs: "copants" },
    Relation { name: "frobenius-left", lhs: "(id | copants) ; (pants | id)", rhs: "pants ; copants" },
    Relation { name: "frobenius-right", lhs: "(copants | id) ; (id | pants)", rhs: "pants ; copants" },
    Relation { name: "zigzag-left", lhs: "(id | (cap ; copants)) ; ((pants ; cup) | id)", rhs: "id" },
    Relation { name: "zigzag-right", lhs: "((cap ; copants) | id) ; (id | (pants ; cup))", rhs: "id" },
    Relation { name: "swap-involution", lhs: "swap ; swap", rhs: "id | id" },
];

/// Checks every relation in [`STANDARD_RELATIONS`], in order.
pub fn check_standard_relations<T: Scalar>(
    frobenius: &FrobeniusAlgebra<T>,
) -> Result<Vec<(Relation, bool)>, BordismError> {
    let ev = Evaluator::new(frobenius)?;
    STANDARD_RELATIONS
        .iter()
        .map(|rel| {
            let (l, r) = (parse(rel.lhs)?, parse(rel.rhs)?);
            Ok((*rel, ev.evaluate(&l)? == ev.evaluate(&r)?))
        })
        .collect()
}
