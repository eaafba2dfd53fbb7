//! Crafted invalid inputs with the expected first error kind and byte position.

use igscript::{IssueKind, IssueKind::*};

pub const INVALID: &[(&str, IssueKind, usize)] = &[
    ("", EmptyInput, 0),
    ("  \n\t", EmptyInput, 0),
    ("Q(x)", UnknownSymbol, 0),
    ("A(x) Foo{A(y)}", UnknownSymbol, 5),
    ("A(x) Bdr(y)", UnknownSymbol, 5),
    ("A,p(x) I(y) Bdir,q(z)", UnknownSymbol, 12),
    ("A(größe) Q(x)", UnknownSymbol, 11),
    ("A()", EmptyContent, 0),
    ("A(x) I(   )", EmptyContent, 5),
    ("A(x) I(y) Cac{}", NoComponentsFound, 13),
    ("just prose", NoComponentsFound, 0),
    ("Cac{just text}", NoComponentsFound, 3),
    ("I([AND] x)", DanglingOperator, 2),
    ("I(x [XOR])", DanglingOperator, 4),
    ("I(x [AND] [AND] y)", DanglingOperator, 10),
    ("A(x) {I(a) [XOR]}", DanglingOperator, 11),
    ("A(x) [AND] A(y)", UnexpectedOperator, 5),
    ("A(x) I(y) [AND]", UnexpectedOperator, 10),
    ("Cac{A(x) I(y)} [XOR] A(z)", UnexpectedOperator, 15),
    ("A(x) I(y) (note [AND] more)", UnexpectedOperator, 16),
    ("A(x) {I(a) Bdir(b)}", MissingOperator, 5),
    ("I(x [r] y)", UnexpectedAnnotation, 4),
    ("I(a [AND] (b [r] c))", UnexpectedAnnotation, 13),
    ("A(x) I(y) (note [r] more)", UnexpectedAnnotation, 16),
    ("I(x {y})", UnexpectedBrace, 4),
    ("A(x) I(y) (note {z} more)", UnexpectedBrace, 16),
    ("A(x))", UnbalancedBracket, 4),
    ("A(x} I(y)", UnbalancedBracket, 1),
    ("A(x", UnbalancedBracket, 1),
    ("A(x) I(y [AND] z", UnbalancedBracket, 6),
    ("A[role=x(y)", UnbalancedBracket, 1),
    ("A(x) ]", UnbalancedBracket, 5),
    ("A(x) I((a [AND] b)", UnbalancedBracket, 6),
    ("A(x) I(a [AND] b [OR] c)", AmbiguousPrecedence, 17),
    ("Cac{Cac{A(a) I(b)} [AND] Cac{A(c) I(d)} [XOR] Cac{A(e) I(f)}}", AmbiguousPrecedence, 40),
    ("Cac{Cac{A(a) I(b)} [AND] Bdir{A(c) I(d)}}", SymbolMismatch, 25),
];
