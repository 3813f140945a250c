//! Abstract syntax for MiniGen source units.

use crate::names::{ClassName, MemberLabel, TypeVarName};

/// A parsed `.mg` file: an ordered sequence of class declarations.
///
/// Class names within a unit are pairwise distinct (checked by the parser).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceUnit {
    pub source_name: String,
    pub classes: Vec<ClassDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecl {
    pub name: ClassName,
    pub type_params: Vec<TypeParamDecl>,
    /// The `extends` clause. Always a class-name application, never a bare
    /// type variable.
    pub superclass: Option<TypeTerm>,
    pub members: Vec<MemberDecl>,
}

impl ClassDecl {
    pub fn param_names(&self) -> Vec<TypeVarName> {
        self.type_params.iter().map(|p| p.name.clone()).collect()
    }
}

/// A declared type parameter: plain `T` (no bounds recorded) or interval
/// form `[T:LB-UB]`. A plain parameter desugars to `[T:Null-Object]` where
/// bounds are needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeParamDecl {
    pub name: TypeVarName,
    pub lower: Option<TypeTerm>,
    pub upper: Option<TypeTerm>,
}

impl TypeParamDecl {
    pub fn plain(name: impl Into<TypeVarName>) -> Self {
        TypeParamDecl { name: name.into(), lower: None, upper: None }
    }

    /// Lower bound with the plain form desugared.
    pub fn lower_or_default(&self) -> TypeTerm {
        self.lower.clone().unwrap_or(TypeTerm::Bottom)
    }

    /// Upper bound with the plain form desugared.
    pub fn upper_or_default(&self) -> TypeTerm {
        self.upper.clone().unwrap_or(TypeTerm::Top)
    }
}

/// A surface type expression.
///
/// `Top` renders as `Object` (shorthand `O`) and `Bottom` as `Null`
/// (shorthand `N`); the parser folds those names into the two variants.
/// Wildcards may appear only in argument position of an `App`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeTerm {
    Var(TypeVarName),
    App(ClassName, Vec<TypeTerm>),
    /// `?`
    WildBare,
    /// `? extends U`
    WildExtends(Box<TypeTerm>),
    /// `? super L`
    WildSuper(Box<TypeTerm>),
    Top,
    Bottom,
}

impl TypeTerm {
    pub fn app(class: impl Into<ClassName>, args: Vec<TypeTerm>) -> Self {
        TypeTerm::App(class.into(), args)
    }

    pub fn var(name: impl Into<TypeVarName>) -> Self {
        TypeTerm::Var(name.into())
    }

    pub fn is_wildcard(&self) -> bool {
        matches!(
            self,
            TypeTerm::WildBare | TypeTerm::WildExtends(_) | TypeTerm::WildSuper(_)
        )
    }

    /// True when no wildcard occurs anywhere in the term.
    pub fn is_wildcard_free(&self) -> bool {
        match self {
            TypeTerm::Var(_) | TypeTerm::Top | TypeTerm::Bottom => true,
            TypeTerm::App(_, args) => args.iter().all(|a| a.is_wildcard_free()),
            TypeTerm::WildBare | TypeTerm::WildExtends(_) | TypeTerm::WildSuper(_) => false,
        }
    }

    /// True when no type variable occurs anywhere in the term.
    pub fn is_ground(&self) -> bool {
        match self {
            TypeTerm::Var(_) => false,
            TypeTerm::Top | TypeTerm::Bottom | TypeTerm::WildBare => true,
            TypeTerm::App(_, args) => args.iter().all(|a| a.is_ground()),
            TypeTerm::WildExtends(b) | TypeTerm::WildSuper(b) => b.is_ground(),
        }
    }

    /// Collect free variable names, in first-occurrence order.
    pub fn free_vars(&self, out: &mut Vec<TypeVarName>) {
        match self {
            TypeTerm::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            TypeTerm::App(_, args) => {
                for a in args {
                    a.free_vars(out);
                }
            }
            TypeTerm::WildExtends(b) | TypeTerm::WildSuper(b) => b.free_vars(out),
            TypeTerm::WildBare | TypeTerm::Top | TypeTerm::Bottom => {}
        }
    }
}

/// A method return type: `void` or a type term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReturnTerm {
    Void,
    Type(TypeTerm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MemberDecl {
    Field {
        private: bool,
        label: MemberLabel,
        ty: TypeTerm,
    },
    /// At most one per class; the label is the class name in source.
    Ctor {
        params: Vec<(MemberLabel, TypeTerm)>,
        body: StmtList,
    },
    Method {
        label: MemberLabel,
        ret: ReturnTerm,
        params: Vec<(MemberLabel, TypeTerm)>,
        body: StmtList,
    },
}

impl MemberDecl {
    pub fn label(&self) -> Option<&MemberLabel> {
        match self {
            MemberDecl::Field { label, .. } | MemberDecl::Method { label, .. } => Some(label),
            MemberDecl::Ctor { .. } => None,
        }
    }
}

/// A statement body, held as verbatim text except that `new C<...>(...)`
/// instantiation types are parsed into structured nodes.
///
/// Non-instantiation text round-trips byte-identically through
/// parse → render (comments excepted; they are dropped at lexing).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StmtList {
    pub pieces: Vec<StmtPiece>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtPiece {
    Text(String),
    /// The type following a `new` keyword; the `new` itself and the argument
    /// list stay in the surrounding text pieces.
    New(TypeTerm),
}

impl StmtList {
    pub fn instantiation_types(&self) -> Vec<&TypeTerm> {
        self.pieces
            .iter()
            .filter_map(|p| match p {
                StmtPiece::New(t) => Some(t),
                StmtPiece::Text(_) => None,
            })
            .collect()
    }
}
