//! Words, subvariety descriptors, verbal subobjects and reflections.

use std::fmt;
use std::ops::ControlFlow;

use crate::algebra::{greedy_generators, AlgebraRef, Elem, FiniteAlgebra, Kind, Subalgebra, ONE};
use crate::budget::{pow, Budget};
use crate::congruence::CongruenceBuilder;
use crate::error::{Error, Result};
use crate::hom::{quotient, Homomorphism};
use crate::ideal::{ideal_closure_iter, Ideal};

/// A term over the group or loop signature with numbered variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    Var(usize),
    One,
    Mul(Box<Word>, Box<Word>),
    Ldiv(Box<Word>, Box<Word>),
    Rdiv(Box<Word>, Box<Word>),
    Inv(Box<Word>),
}

const VAR_NAMES: [&str; 8] = ["x", "y", "z", "u", "v", "w", "s", "t"];

impl Word {
    pub fn var(i: usize) -> Word {
        Word::Var(i)
    }

    pub fn mul(a: Word, b: Word) -> Word {
        Word::Mul(Box::new(a), Box::new(b))
    }

    pub fn ldiv(a: Word, b: Word) -> Word {
        Word::Ldiv(Box::new(a), Box::new(b))
    }

    pub fn rdiv(a: Word, b: Word) -> Word {
        Word::Rdiv(Box::new(a), Box::new(b))
    }

    pub fn inv(a: Word) -> Word {
        Word::Inv(Box::new(a))
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: Word, b: Word) -> Word {
        Word::mul(
            Word::mul(Word::mul(a.clone(), b.clone()), Word::inv(a)),
            Word::inv(b),
        )
    }

    /// `((xy)z)/(x(yz))` on variables 0, 1, 2.
    pub fn associator() -> Word {
        let (x, y, z) = (Word::var(0), Word::var(1), Word::var(2));
        Word::rdiv(
            Word::mul(Word::mul(x.clone(), y.clone()), z.clone()),
            Word::mul(x, Word::mul(y, z)),
        )
    }

    /// `[[..[x0,x1],x2],..,xk]`, of weight `k+1`.
    pub fn left_normed_commutator(k: usize) -> Word {
        assert!(k >= 1);
        (2..=k).fold(Word::commutator(Word::var(0), Word::var(1)), |acc, i| {
            Word::commutator(acc, Word::var(i))
        })
    }

    /// The derived word of depth `k` on `2^k` variables.
    pub fn derived(k: usize) -> Word {
        fn build(depth: usize, offset: usize) -> Word {
            if depth == 0 {
                return Word::var(offset);
            }
            let half = 1 << (depth - 1);
            Word::commutator(build(depth - 1, offset), build(depth - 1, offset + half))
        }
        assert!(k >= 1);
        build(k, 0)
    }

    /// Number of variables, i.e. one more than the largest index.
    pub fn arity(&self) -> usize {
        match self {
            Word::Var(i) => i + 1,
            Word::One => 0,
            Word::Mul(a, b) | Word::Ldiv(a, b) | Word::Rdiv(a, b) => a.arity().max(b.arity()),
            Word::Inv(a) => a.arity(),
        }
    }

    pub fn uses_inverse(&self) -> bool {
        match self {
            Word::Var(_) | Word::One => false,
            Word::Mul(a, b) | Word::Ldiv(a, b) | Word::Rdiv(a, b) => a.uses_inverse() || b.uses_inverse(),
            Word::Inv(_) => true,
        }
    }

    fn mark_vars(&self, seen: &mut Vec<bool>) {
        match self {
            Word::Var(i) => seen[*i] = true,
            Word::One => {}
            Word::Mul(a, b) | Word::Ldiv(a, b) | Word::Rdiv(a, b) => {
                a.mark_vars(seen);
                b.mark_vars(seen);
            }
            Word::Inv(a) => a.mark_vars(seen),
        }
    }

    /// Every variable index below the arity occurs.
    pub fn has_contiguous_variables(&self) -> bool {
        let mut seen = vec![false; self.arity()];
        self.mark_vars(&mut seen);
        seen.into_iter().all(|s| s)
    }

    /// Checks that the word fits the signature of `kind`.
    pub fn check_signature(&self, kind: Kind) -> Result<()> {
        if kind == Kind::Loop && self.uses_inverse() {
            return Err(Error::SignatureMismatch(format!(
                "word `{self}` uses `inv`, which loops do not have"
            )));
        }
        Ok(())
    }

    /// Parses the prefix syntax, e.g. `(rdiv (mul (mul x y) z) (mul x (mul y z)))`.
    ///
    /// Variables are lowercase identifiers, numbered by first appearance;
    /// `1` and `one` denote the unit.
    pub fn parse(text: &str) -> Result<Word> {
        let mut p = Parser {
            text,
            pos: 0,
            names: Vec::new(),
        };
        let w = p.term()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("trailing input after the term"));
        }
        Ok(w)
    }

    pub(crate) fn compile(&self) -> Program {
        let mut ops = Vec::new();
        self.emit(&mut ops);
        let mut depth = 0usize;
        let mut max_depth = 0usize;
        for op in &ops {
            match op {
                Op::Var(_) | Op::One => depth += 1,
                Op::Mul | Op::Ldiv | Op::Rdiv => depth -= 1,
                Op::Inv => {}
            }
            max_depth = max_depth.max(depth);
        }
        Program {
            ops,
            arity: self.arity(),
            max_depth,
        }
    }

    fn emit(&self, ops: &mut Vec<Op>) {
        match self {
            Word::Var(i) => ops.push(Op::Var(*i)),
            Word::One => ops.push(Op::One),
            Word::Mul(a, b) => {
                a.emit(ops);
                b.emit(ops);
                ops.push(Op::Mul);
            }
            Word::Ldiv(a, b) => {
                a.emit(ops);
                b.emit(ops);
                ops.push(Op::Ldiv);
            }
            Word::Rdiv(a, b) => {
                a.emit(ops);
                b.emit(ops);
                ops.push(Op::Rdiv);
            }
            Word::Inv(a) => {
                a.emit(ops);
                ops.push(Op::Inv);
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Var(i) => match VAR_NAMES.get(*i) {
                Some(name) => f.write_str(name),
                None => write!(f, "x{i}"),
            },
            Word::One => f.write_str("1"),
            Word::Mul(a, b) => write!(f, "(mul {a} {b})"),
            Word::Ldiv(a, b) => write!(f, "(ldiv {a} {b})"),
            Word::Rdiv(a, b) => write!(f, "(rdiv {a} {b})"),
            Word::Inv(a) => write!(f, "(inv {a})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: Vec<String>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.text[..self.pos].chars().count() + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !(c.is_ascii_alphanumeric() || c == '_') {
                break;
            }
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn term(&mut self) -> Result<Word> {
        self.skip_ws();
        let start = self.pos;
        match self.text[self.pos..].chars().next() {
            None => Err(self.error("expected a term")),
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let op_start = self.pos;
                let op = self.ident().to_string();
                let arity = match op.as_str() {
                    "mul" | "ldiv" | "rdiv" => 2,
                    "inv" => 1,
                    _ => {
                        self.pos = op_start;
                        return Err(self.error(&format!("unknown operation `{op}`")));
                    }
                };
                let a = self.term()?;
                let w = if arity == 2 {
                    let b = self.term()?;
                    match op.as_str() {
                        "mul" => Word::mul(a, b),
                        "ldiv" => Word::ldiv(a, b),
                        _ => Word::rdiv(a, b),
                    }
                } else {
                    Word::inv(a)
                };
                self.skip_ws();
                if !self.text[self.pos..].starts_with(')') {
                    return Err(self.error(&format!("`{op}` takes {arity} argument(s); expected `)`")));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(_) => {
                let name = self.ident().to_string();
                if name.is_empty() {
                    return Err(self.error("unexpected character"));
                }
                if name == "1" || name == "one" {
                    return Ok(Word::One);
                }
                if !name.starts_with(|c: char| c.is_ascii_lowercase()) {
                    self.pos = start;
                    return Err(self.error(&format!("`{name}` is not a lowercase variable name")));
                }
                if matches!(name.as_str(), "mul" | "ldiv" | "rdiv" | "inv") {
                    self.pos = start;
                    return Err(self.error(&format!("operation `{name}` used as a variable")));
                }
                let index = match self.names.iter().position(|n| *n == name) {
                    Some(i) => i,
                    None => {
                        self.names.push(name);
                        self.names.len() - 1
                    }
                };
                Ok(Word::Var(index))
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Op {
    Var(usize),
    One,
    Mul,
    Ldiv,
    Rdiv,
    Inv,
}

/// A word flattened to postfix form.
#[derive(Clone, Debug)]
pub(crate) struct Program {
    ops: Vec<Op>,
    arity: usize,
    max_depth: usize,
}

impl Program {
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn eval(&self, alg: &FiniteAlgebra, args: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        stack.reserve(self.max_depth);
        for op in &self.ops {
            match *op {
                Op::Var(i) => stack.push(args[i]),
                Op::One => stack.push(ONE),
                Op::Inv => {
                    let a = stack.pop().unwrap();
                    stack.push(alg.inv(a));
                }
                Op::Mul | Op::Ldiv | Op::Rdiv => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(match op {
                        Op::Mul => alg.mul(a, b),
                        Op::Ldiv => alg.ldiv(a, b),
                        _ => alg.rdiv(a, b),
                    });
                }
            }
        }
        stack[0]
    }
}

/// Calls `f` on every tuple of length `r` over `elems`, in odometer order.
pub(crate) fn for_each_tuple(elems: &[Elem], r: usize, mut f: impl FnMut(&[Elem]) -> ControlFlow<()>) -> ControlFlow<()> {
    if r == 0 {
        return f(&[]);
    }
    if elems.is_empty() {
        return ControlFlow::Continue(());
    }
    let mut idx = vec![0usize; r];
    let mut args: Vec<Elem> = vec![elems[0]; r];
    loop {
        f(&args)?;
        let mut i = r;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < elems.len() {
                args[i] = elems[idx[i]];
                break;
            }
            idx[i] = 0;
            args[i] = elems[0];
        }
    }
}

/// Exact structural algorithms for the built-in descriptors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shortcut {
    /// Lower central series term `gamma_{k+1}`.
    Nilpotent(usize),
    /// Derived series term `delta_k`.
    Solvable(usize),
    /// The associator subloop.
    Associative,
}

/// A subvariety presented by finitely many identities `w = 1`.
#[derive(Clone, Debug)]
pub struct VarietyDescriptor {
    name: String,
    kind: Kind,
    wgen: Vec<Word>,
    programs: Vec<Program>,
    shortcut: Option<Shortcut>,
}

/// Largest class accepted by [`VarietyDescriptor::nil`] and [`VarietyDescriptor::sol`].
pub const MAX_CLASS: usize = 3;

impl VarietyDescriptor {
    /// A descriptor from user-supplied words.
    ///
    /// The verbal subobject is then the ideal generated by the values of
    /// these words; if they do not generate every identity of the intended
    /// subvariety the results describe the subvariety they do present.
    pub fn custom(name: impl Into<String>, kind: Kind, wgen: Vec<Word>) -> Result<Self> {
        for w in &wgen {
            w.check_signature(kind)?;
            if !w.has_contiguous_variables() {
                return Err(Error::SignatureMismatch(format!(
                    "word `{w}` skips a variable index"
                )));
            }
        }
        Ok(Self::with_shortcut(name.into(), kind, wgen, None))
    }

    fn with_shortcut(name: String, kind: Kind, wgen: Vec<Word>, shortcut: Option<Shortcut>) -> Self {
        let programs = wgen.iter().map(Word::compile).collect();
        VarietyDescriptor {
            name,
            kind,
            wgen,
            programs,
            shortcut,
        }
    }

    /// Abelian groups: `x y x^-1 y^-1 = 1`.
    pub fn ab() -> Self {
        Self::with_shortcut(
            "Ab".into(),
            Kind::Group,
            vec![Word::left_normed_commutator(1)],
            Some(Shortcut::Nilpotent(1)),
        )
    }

    /// Nilpotent groups of class at most `k`.
    pub fn nil(k: usize) -> Result<Self> {
        check_class("Nil", k)?;
        Ok(Self::with_shortcut(
            format!("Nil_{k}"),
            Kind::Group,
            vec![Word::left_normed_commutator(k)],
            Some(Shortcut::Nilpotent(k)),
        ))
    }

    /// Solvable groups of derived length at most `k`.
    pub fn sol(k: usize) -> Result<Self> {
        check_class("Sol", k)?;
        Ok(Self::with_shortcut(
            format!("Sol_{k}"),
            Kind::Group,
            vec![Word::derived(k)],
            Some(Shortcut::Solvable(k)),
        ))
    }

    /// Groups inside loops: `((xy)z)/(x(yz)) = 1`.
    pub fn gp() -> Self {
        Self::with_shortcut("Gp".into(), Kind::Loop, vec![Word::associator()], Some(Shortcut::Associative))
    }

    /// Looks up a built-in descriptor: `Ab`, `Gp`, `Nil_k`, `Sol_k`
    /// (also `Nilk`, `Nil-k`), case-insensitively.
    pub fn by_name(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        let unknown = || {
            Error::SignatureMismatch(format!(
                "unknown variety `{name}` (expected Ab, Gp, Nil_k or Sol_k with 1 <= k <= {MAX_CLASS})"
            ))
        };
        match lower.as_str() {
            "ab" => return Ok(Self::ab()),
            "gp" => return Ok(Self::gp()),
            _ => {}
        }
        for (prefix, make) in [("nil", Self::nil as fn(usize) -> Result<Self>), ("sol", Self::sol)] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                let digits = rest.trim_start_matches(['_', '-']);
                let k: usize = digits.parse().map_err(|_| unknown())?;
                return make(k).map_err(|_| unknown());
            }
        }
        Err(unknown())
    }

    /// Reads a word file: `#` comments, an optional `kind group|loop` line
    /// (default group), an optional `name NAME` line, then one word per line.
    pub fn from_word_file(default_name: &str, text: &str) -> Result<Self> {
        let mut kind = Kind::Group;
        let mut name = default_name.to_string();
        let mut words = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let offset = line.len() - line.trim_start().len();
            let relocate = |e: Error| match e {
                Error::Parse { column, message, .. } => Error::Parse {
                    line: i + 1,
                    column: column + offset,
                    message,
                },
                other => other,
            };
            if let Some(k) = trimmed.strip_prefix("kind ") {
                kind = k.trim().parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    column: offset + 6,
                    message: format!("unknown kind `{}`", k.trim()),
                })?;
            } else if let Some(n) = trimmed.strip_prefix("name ") {
                name = n.trim().to_string();
            } else {
                words.push(Word::parse(trimmed).map_err(relocate)?);
            }
        }
        if words.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: "word file contains no words".into(),
            });
        }
        Self::custom(name, kind, words)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn wgen(&self) -> &[Word] {
        &self.wgen
    }

    pub fn max_arity(&self) -> usize {
        self.wgen.iter().map(Word::arity).max().unwrap_or(0)
    }

    /// True for the built-in descriptors, whose verbal subobjects are
    /// computed structurally.
    pub fn is_builtin(&self) -> bool {
        self.shortcut.is_some()
    }

    pub(crate) fn programs(&self) -> &[Program] {
        &self.programs
    }

    pub(crate) fn check_kind(&self, alg: &FiniteAlgebra) -> Result<()> {
        if alg.kind() != self.kind {
            return Err(Error::SignatureMismatch(format!(
                "variety {} is over {}s but the algebra is a {}",
                self.name,
                self.kind,
                alg.kind()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn check_class(family: &str, k: usize) -> Result<()> {
    if (1..=MAX_CLASS).contains(&k) {
        Ok(())
    } else {
        Err(Error::SignatureMismatch(format!(
            "{family}_{k} is not available; classes 1..={MAX_CLASS} ship"
        )))
    }
}

/// Evaluates `w` on `args` in `alg`.
pub fn eval_word(w: &Word, alg: &FiniteAlgebra, args: &[Elem]) -> Result<Elem> {
    if args.len() != w.arity() {
        return Err(Error::ArityMismatch {
            expected: w.arity(),
            got: args.len(),
        });
    }
    w.check_signature(alg.kind())?;
    if let Some(&bad) = args.iter().find(|&&a| a as usize >= alg.order()) {
        return Err(Error::SignatureMismatch(format!("argument {bad} is not an element")));
    }
    Ok(w.compile().eval(alg, args, &mut Vec::new()))
}

/// `[A]_B` with the default budget.
pub fn verbal_subobject(alg: &AlgebraRef, v: &VarietyDescriptor) -> Result<Ideal> {
    verbal_subobject_with(alg, v, Budget::default())
}

/// `[A]_B`: the least ideal whose quotient satisfies every identity of `v`.
///
/// Built-in descriptors use exact structural algorithms (lower central and
/// derived series, the associator subloop); algebras embedded in a product
/// of members of `v` are recognised directly; anything else is computed by
/// evaluating the words on class representatives of the current quotient
/// until a full pass produces no new value, within `budget` evaluations.
pub fn verbal_subobject_with(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<Ideal> {
    v.check_kind(alg)?;
    if alg.is_trivial() || factors_in_variety(alg, v, budget)? {
        return Ok(Ideal::trivial(alg));
    }
    if let Some(product) = full_product_verbal(alg, v, budget)? {
        return Ok(product);
    }
    Ok(match v.shortcut {
        Some(Shortcut::Nilpotent(k)) => {
            let full = Ideal::full(alg);
            let mut gamma = full.clone();
            for _ in 0..k {
                gamma = mutual_commutator(alg, &gamma, &full);
            }
            gamma
        }
        Some(Shortcut::Solvable(k)) => {
            let mut delta = Ideal::full(alg);
            for _ in 0..k {
                delta = mutual_commutator(alg, &delta, &delta);
            }
            delta
        }
        Some(Shortcut::Associative) => associator_ideal(alg),
        None => verbal_by_passes(alg, v, budget)?,
    })
}

/// A subalgebra of a product whose factors all lie in the variety lies in
/// it too (identities hold componentwise).
fn factors_in_variety(alg: &FiniteAlgebra, v: &VarietyDescriptor, budget: Budget) -> Result<bool> {
    let factors = alg.factors();
    if factors.is_empty() {
        return Ok(false);
    }
    for f in factors {
        if !verbal_subobject_with(f, v, budget)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[F1 x .. x Fk]_B = [F1]_B x .. x [Fk]_B` when `alg` is the whole
/// product: the quotient by the right side lies in `B`, and since words
/// vanish at 1 each `[Fi]_B` appears in one coordinate with 1 elsewhere.
fn full_product_verbal(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<Option<Ideal>> {
    let factors = alg.factors();
    if factors.is_empty() || factors.iter().map(|f| f.order()).product::<usize>() != alg.order() {
        return Ok(None);
    }
    let parts = factors
        .iter()
        .map(|f| verbal_subobject_with(f, v, budget))
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<u32> = alg
        .elements()
        .map(|e| {
            let t = alg.tuple(e).expect("tuple algebra");
            // Mixed-radix code of the coordinate blocks.
            t.iter().zip(&parts).fold(0u32, |acc, (&c, p)| {
                acc * p.parent().order() as u32 + p.witness().block(c)
            })
        })
        .collect();
    Ok(Some(Ideal::from_congruence(crate::congruence::Congruence::from_labels(alg, &labels))))
}

fn subgroup_generators(alg: &AlgebraRef, h: &Ideal) -> Vec<Elem> {
    if h.is_full() {
        alg.generators().to_vec()
    } else {
        greedy_generators(alg, h.members().iter().copied())
    }
}

/// `[H,K]` for normal subgroups: the normal closure of the commutators of
/// their generators.
pub(crate) fn mutual_commutator(alg: &AlgebraRef, h: &Ideal, k: &Ideal) -> Ideal {
    let gh = subgroup_generators(alg, h);
    let gk = if h.members() == k.members() {
        gh.clone()
    } else {
        subgroup_generators(alg, k)
    };
    ideal_closure_iter(
        alg,
        gh.iter()
            .flat_map(|&x| gk.iter().map(move |&y| (x, y)))
            .map(|(x, y)| alg.commutator(x, y)),
    )
}

/// `[A,A,A]`. Associators of generators give a lower bound; for a
/// subalgebra of a product the ideal is bounded above by the tuples whose
/// coordinates lie in the factors' associator ideals. When the bounds meet
/// the lower bound is the answer, otherwise the nucleus passes finish the
/// job on the (smaller) quotient by the lower bound.
fn associator_ideal(alg: &AlgebraRef) -> Ideal {
    let gens = alg.generators().to_vec();
    let mut b = CongruenceBuilder::new(alg);
    'seeds: for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                b.merge(alg.associator(x, y, z), ONE);
                if b.is_total() {
                    break 'seeds;
                }
            }
        }
    }
    let lower = Ideal::from_congruence(b.finish());
    if lower.is_full() {
        return lower;
    }
    if !alg.factors().is_empty() {
        let bounds: Vec<Ideal> = alg.factors().iter().map(associator_ideal).collect();
        let upper = alg
            .elements()
            .filter(|&e| {
                let t = alg.tuple(e).expect("tuple algebra");
                t.iter().zip(&bounds).all(|(&c, i)| i.contains(c))
            })
            .count();
        if upper == lower.len() {
            return lower;
        }
    }
    if lower.is_trivial() {
        return nucleus_passes(alg);
    }
    let (q, proj) = quotient(alg, lower.witness()).expect("witness belongs to alg");
    let top = nucleus_passes(&q);
    let labels: Vec<u32> = alg.elements().map(|e| top.witness().block(proj.apply(e))).collect();
    Ideal::from_congruence(crate::congruence::Congruence::from_labels(alg, &labels))
}

/// Identifies associators until every generator of the quotient is nuclear.
/// The nucleus is a subloop, so the quotient is then a group.
fn nucleus_passes(alg: &AlgebraRef) -> Ideal {
    let gens = alg.generators().to_vec();
    let mut b = CongruenceBuilder::new(alg);
    'passes: loop {
        let reps = b.roots();
        let mut changed = false;
        for &x in &reps {
            if b.find(x) != x {
                continue;
            }
            for &y in &reps {
                if b.find(y) != y {
                    continue;
                }
                for &g in &gens {
                    for value in [alg.associator(g, x, y), alg.associator(x, g, y), alg.associator(x, y, g)] {
                        if !b.same(value, ONE) {
                            b.merge(value, ONE);
                            changed = true;
                            if b.is_total() {
                                break 'passes;
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ideal::from_congruence(b.finish())
}

/// Word values on representatives of the current quotient, repeated until
/// the quotient satisfies every word.
fn verbal_by_passes(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<Ideal> {
    let mut b = CongruenceBuilder::new(alg);
    let mut spent: u128 = 0;
    let mut stack = Vec::new();
    loop {
        let mut changed = false;
        for prog in v.programs() {
            if b.is_total() {
                break;
            }
            let reps = b.roots();
            spent = spent.saturating_add(pow(reps.len(), prog.arity()));
            budget.check("verbal subobject", prog.arity(), spent)?;
            let _ = for_each_tuple(&reps, prog.arity(), |args| {
                let value = prog.eval(alg, args, &mut stack);
                if !b.same(value, ONE) {
                    b.merge(value, ONE);
                    changed = true;
                    if b.is_total() {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            });
        }
        if !changed || b.is_total() {
            break;
        }
    }
    Ok(Ideal::from_congruence(b.finish()))
}

/// The ideal generated by every value of every word on every argument
/// tuple, without shortcuts. Costs `sum |A|^arity` evaluations.
pub fn verbal_subobject_by_words(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<Ideal> {
    v.check_kind(alg)?;
    let estimate = v
        .programs()
        .iter()
        .map(|p| pow(alg.order(), p.arity()))
        .fold(0u128, u128::saturating_add);
    budget.check("verbal subobject by words", v.max_arity(), estimate)?;
    let elems: Vec<Elem> = alg.elements().collect();
    let mut values = vec![false; alg.order()];
    let mut stack = Vec::new();
    for prog in v.programs() {
        let _ = for_each_tuple(&elems, prog.arity(), |args| {
            values[prog.eval(alg, args, &mut stack) as usize] = true;
            ControlFlow::Continue(())
        });
    }
    Ok(ideal_closure_iter(alg, alg.elements().filter(|&e| values[e as usize])))
}

/// True iff every word of `v` vanishes on every argument tuple.
pub fn in_subvariety(alg: &AlgebraRef, v: &VarietyDescriptor) -> Result<bool> {
    in_subvariety_with(alg, v, Budget::default())
}

/// Scans all argument tuples when that fits in `budget`; otherwise decides
/// through the verbal subobject.
pub fn in_subvariety_with(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<bool> {
    v.check_kind(alg)?;
    let estimate = v
        .programs()
        .iter()
        .map(|p| pow(alg.order(), p.arity()))
        .fold(0u128, u128::saturating_add);
    if budget.check("identity scan", v.max_arity(), estimate).is_err() {
        return Ok(verbal_subobject_with(alg, v, budget)?.is_trivial());
    }
    let elems: Vec<Elem> = alg.elements().collect();
    let mut stack = Vec::new();
    for prog in v.programs() {
        let found = for_each_tuple(&elems, prog.arity(), |args| {
            if prog.eval(alg, args, &mut stack) != ONE {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_break() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reflection `A -> A/[A]_B` and its unit.
pub fn reflection(alg: &AlgebraRef, v: &VarietyDescriptor) -> Result<(AlgebraRef, Homomorphism)> {
    reflection_with(alg, v, Budget::default())
}

pub fn reflection_with(alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<(AlgebraRef, Homomorphism)> {
    let verbal = verbal_subobject_with(alg, v, budget)?;
    quotient(alg, verbal.witness())
}

/// `[f]_B : [A']_B -> [A]_B` together with both verbal subobjects.
#[derive(Clone, Debug)]
pub struct InducedVerbalHom {
    pub source: Subalgebra,
    pub target: Subalgebra,
    pub map: Homomorphism,
}

pub fn induced_verbal_hom(f: &Homomorphism, v: &VarietyDescriptor) -> Result<InducedVerbalHom> {
    induced_verbal_hom_with(f, v, Budget::default())
}

pub fn induced_verbal_hom_with(f: &Homomorphism, v: &VarietyDescriptor, budget: Budget) -> Result<InducedVerbalHom> {
    let src = verbal_subobject_with(f.src(), v, budget)?;
    let dst = verbal_subobject_with(f.dst(), v, budget)?;
    let source = Subalgebra::new_unchecked(f.src(), src.members().to_vec());
    let target = Subalgebra::new_unchecked(f.dst(), dst.members().to_vec());
    let mut map = Vec::with_capacity(src.len());
    for &m in src.members() {
        let image = f.apply(m);
        match target.locate(image) {
            Some(i) => map.push(i),
            None => {
                return Err(Error::NotHomomorphism(format!(
                    "verbal element {m} maps outside the target's verbal subobject"
                )))
            }
        }
    }
    let map = Homomorphism::new_unchecked(source.algebra(), target.algebra(), map);
    Ok(InducedVerbalHom { source, target, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn alg(name: &str) -> AlgebraRef {
        corpus::bundled(name).unwrap().algebra
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "(rdiv (mul (mul x y) z) (mul x (mul y z)))";
        let w = Word::parse(text).unwrap();
        assert_eq!(w, Word::associator());
        assert_eq!(w.to_string(), text);
        assert_eq!(w.arity(), 3);
    }

    #[test]
    fn parse_binds_names_by_first_appearance() {
        let w = Word::parse("(mul b (inv a))").unwrap();
        assert_eq!(w, Word::mul(Word::var(0), Word::inv(Word::var(1))));
        assert_eq!(Word::parse(" 1 ").unwrap(), Word::One);
    }

    #[test]
    fn parse_errors_carry_columns() {
        assert!(matches!(Word::parse("(mul x)"), Err(Error::Parse { column: 7, .. })));
        assert!(matches!(Word::parse("(pow x y)"), Err(Error::Parse { column: 2, .. })));
        assert!(matches!(Word::parse("(mul x y) z"), Err(Error::Parse { column: 11, .. })));
        assert!(matches!(Word::parse("X"), Err(Error::Parse { column: 1, .. })));
    }

    #[test]
    fn built_in_word_shapes() {
        assert_eq!(Word::left_normed_commutator(2).arity(), 3);
        assert_eq!(Word::derived(2).arity(), 4);
        assert_eq!(Word::derived(3).arity(), 8);
        assert!(Word::derived(3).has_contiguous_variables());
    }

    #[test]
    fn commutator_values() {
        let c = Word::left_normed_commutator(1);
        assert_eq!(eval_word(&c, &alg("z4"), &[1, 3]).unwrap(), 0);
        // r = 1, s = 3 and r s r^-1 s^-1 = r^2
        assert_eq!(eval_word(&c, &alg("s3"), &[1, 3]).unwrap(), 2);
        let a = Word::associator();
        assert_eq!(eval_word(&a, &alg("q8"), &[2, 4, 6]).unwrap(), 0);
    }

    #[test]
    fn eval_errors() {
        let c = Word::left_normed_commutator(1);
        assert_eq!(
            eval_word(&c, &alg("z4"), &[1]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
        assert!(matches!(eval_word(&c, &alg("l5"), &[1, 2]), Err(Error::SignatureMismatch(_))));
    }

    #[test]
    fn named_descriptors() {
        assert_eq!(VarietyDescriptor::by_name("nil_2").unwrap().name(), "Nil_2");
        assert_eq!(VarietyDescriptor::by_name("Sol2").unwrap().max_arity(), 4);
        assert_eq!(VarietyDescriptor::by_name("GP").unwrap().kind(), Kind::Loop);
        assert!(VarietyDescriptor::by_name("Nil_4").is_err());
        assert!(VarietyDescriptor::by_name("Rings").is_err());
    }

    #[test]
    fn custom_descriptor_rejects_inverse_on_loops() {
        let w = Word::parse("(inv x)").unwrap();
        assert!(VarietyDescriptor::custom("bad", Kind::Loop, vec![w]).is_err());
    }

    #[test]
    fn word_file() {
        let v = VarietyDescriptor::from_word_file("f", "# exponent 2\nname E2\nkind group\n(mul x x)\n").unwrap();
        assert_eq!(v.name(), "E2");
        let err = VarietyDescriptor::from_word_file("f", "\n  (mul x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn verbal_subobjects_of_small_groups() {
        let ab = VarietyDescriptor::ab();
        assert!(verbal_subobject(&alg("z6"), &ab).unwrap().is_trivial());
        assert_eq!(verbal_subobject(&alg("s3"), &ab).unwrap().members(), &[0, 1, 2]);
        assert_eq!(verbal_subobject(&alg("q8"), &ab).unwrap().members(), &[0, 1]);
        let sol2 = VarietyDescriptor::sol(2).unwrap();
        assert!(verbal_subobject(&alg("a4"), &sol2).unwrap().is_trivial());
        let nil2 = VarietyDescriptor::nil(2).unwrap();
        assert_eq!(verbal_subobject(&alg("a4"), &nil2).unwrap().len(), 4);
    }

    #[test]
    fn l5_associator_subloop() {
        let l5 = alg("l5");
        let gp = VarietyDescriptor::gp();
        // order-5 loops have no proper nontrivial normal subloops
        assert!(verbal_subobject(&l5, &gp).unwrap().is_full());
        let (q, eta) = reflection(&l5, &gp).unwrap();
        assert!(q.is_trivial() && eta.is_surjective());
    }

    #[test]
    fn membership() {
        let ab = VarietyDescriptor::ab();
        assert!(in_subvariety(&alg("z6"), &ab).unwrap());
        assert!(!in_subvariety(&alg("s3"), &ab).unwrap());
        let as_loop = alg("s3").as_loop();
        assert!(in_subvariety(&as_loop, &VarietyDescriptor::gp()).unwrap());
        assert!(in_subvariety(&alg("s3"), &VarietyDescriptor::gp()).is_err());
    }

    #[test]
    fn sign_map_restricts_to_zero() {
        let s3 = alg("s3");
        let z2 = alg("z2");
        let sign = Homomorphism::new(&s3, &z2, vec![0, 0, 0, 1, 1, 1]).unwrap();
        let ind = induced_verbal_hom(&sign, &VarietyDescriptor::ab()).unwrap();
        assert_eq!(ind.source.members(), &[0, 1, 2]);
        assert_eq!(ind.map.map(), &[0, 0, 0]);
    }

    #[test]
    fn odometer_order() {
        let mut seen = Vec::new();
        let _ = for_each_tuple(&[0, 5], 2, |t| {
            seen.push(t.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 5], vec![5, 0], vec![5, 5]]);
    }
}
