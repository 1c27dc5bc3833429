//! The script language: rings, ideals, quotients, modules, flags and tasks.
//!
//! ```text
//! ring S = char 32003, vars x1 x2 x3 x4;
//! ideal L = x1*x3, x1*x4, x2*x3, x2*x4;
//! quotient R = S / L;
//! ideal J = x1 + x3, x2 + x4;
//! task coeffs R J nmax=12;
//! ```

mod ast;
mod lexer;
mod parser;
mod printer;

pub use ast::{PolyExpr, Script, Stmt, StmtKind, TermExpr};
pub use lexer::{tokenize, Pos, Tok, Token};
pub use parser::{parse_poly_expr, parse_script};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn two_statements() {
        let s = parse_script("ring S = char 32003, vars x y; ideal I = x^2, y^3;").unwrap();
        assert_eq!(s.statements.len(), 2);
    }

    #[test]
    fn juxtaposed_variables_are_rejected() {
        let err = parse_script("ring S = char 7, vars x1 x3; ideal I = x1 x3;").unwrap_err();
        match err {
            Error::Parse {
                line,
                column,
                message,
            } => {
                assert_eq!((line, column), (1, 43));
                assert!(message.contains("`*`"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_script("ring S = char 7, vars x1 x3; ideal I = x1*x3;").is_ok());
    }

    #[test]
    fn coefficient_star_is_optional() {
        let a = parse_poly_expr("3x^2*y - 2").unwrap();
        let b = parse_poly_expr("3*x^2*y - 2").unwrap();
        assert_eq!(a.terms, b.terms);
    }

    #[test]
    fn printing_round_trips() {
        let text = "ring S = char 32003, vars x y;\nideal I = -x^2 + 3*x*y, y^3 - 1;\n\
                    module M = [x, 0], [0, y];\nflags S cm_expected=true;\nset nmax=12;\n\
                    task coeffs S I nmax=14;\n";
        let s = parse_script(text).unwrap();
        let again = parse_script(&s.to_string()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.to_string(), text);
    }
}
