//! Identifier newtypes shared across the crate: class names, type variable
//! names, and member (field/method) labels live in disjoint namespaces.

use std::fmt;

/// Reserved label under which constructors are folded into the method
/// component of a signature.
pub const INIT_LABEL: &str = "<init>";

macro_rules! name_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub String);

        impl $name {
            pub fn new(text: impl Into<String>) -> Self {
                Self(text.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(text: &str) -> Self {
                Self(text.to_string())
            }
        }
    };
}

name_type! {
    /// A class name. `Object` and `Null` are predeclared; every other name
    /// comes from a declaration.
    ClassName
}

name_type! {
    /// A type variable name, original or synthetic.
    TypeVarName
}

name_type! {
    /// A field, method, or parameter label.
    MemberLabel
}

impl ClassName {
    pub fn object() -> Self {
        ClassName::from("Object")
    }

    pub fn null() -> Self {
        ClassName::from("Null")
    }

    pub fn is_object(&self) -> bool {
        self.0 == "Object"
    }

    pub fn is_null(&self) -> bool {
        self.0 == "Null"
    }
}
