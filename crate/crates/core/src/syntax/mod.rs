//! MiniGen surface syntax: lexer, recursive-descent parser, and renderer.
//!
//! MiniGen is a small Java-like language, just large enough for generic
//! class declarations: type parameters (plain `T` or interval form
//! `[T:LB-UB]`), one optional `extends` clause, fields, at most one
//! constructor, methods, wildcard type arguments, and statement bodies kept
//! as opaque text except for `new C<...>(...)` instantiation expressions.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod render;

pub use ast::{
    ClassDecl, MemberDecl, ReturnTerm, SourceUnit, StmtList, StmtPiece, TypeParamDecl, TypeTerm,
};
pub use parser::{parse_program, parse_program_named, parse_type, parse_type_in_scope, ParseError};
pub use render::{render_class, render_type, render_unit, RenderOpts};
