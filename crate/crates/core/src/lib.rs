//! genoop-core: a library for experimenting with generic nominally-typed
//! class signatures.
//!
//! The pieces fit together as a pipeline:
//!
//! * [`syntax`] — lexer, parser, and pretty-printer for MiniGen, a small
//!   Java-like surface language (`.mg` files).
//! * [`table`] — class tables: the universe a set of declarations defines,
//!   with `Object` at the top of the subtyping order and `Null` at the bottom.
//! * [`signature`] — class signature constructors, nominal intervals, and the
//!   well-formedness checks over them (interval validity, bound
//!   non-circularity, single-nesting).
//! * [`generify`] — the full-generification transformation: every
//!   non-variable type occurrence in member signatures and instantiation
//!   expressions is captured into a fresh synthetic type parameter.
//! * [`subtype`] — a variance-aware subtyping engine over ground types whose
//!   arguments are intervals, plus canonical supertype chains.
//! * [`graph`] — bounded exploration of the subtyping relation as a graph,
//!   self-similarity (embedding) checks, and DOT output.
//! * [`erasure`] — raw-type modeling: recover, by syntactic comparison with a
//!   legacy class, the instantiation of a fully-generified class that models
//!   its erased form.

pub mod erasure;
pub mod generify;
pub mod graph;
pub mod names;
pub mod signature;
pub mod subtype;
pub mod syntax;
pub mod table;

pub use names::{ClassName, MemberLabel, TypeVarName};
pub use syntax::ast::{ClassDecl, MemberDecl, SourceUnit, TypeParamDecl, TypeTerm};
pub use table::ClassTable;
