use std::fmt;

use super::ast::{PolyExpr, Script, StmtKind, TermExpr};

impl fmt::Display for TermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.factors.is_empty()) {
            (Some(c), true) => write!(f, "{c}")?,
            (None, true) => write!(f, "1")?,
            (Some(c), false) => write!(f, "{c}*")?,
            (None, false) => {}
        }
        for (i, (name, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{name}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Ring {
                name,
                characteristic,
                vars,
            } => write!(
                f,
                "ring {name} = char {characteristic}, vars {};",
                vars.join(" ")
            ),
            StmtKind::Ideal { name, gens } => write!(f, "ideal {name} = {};", join(gens, ", ")),
            StmtKind::Quotient { name, base, ideal } => {
                write!(f, "quotient {name} = {base} / {ideal};")
            }
            StmtKind::Module { name, gens } => {
                let vecs: Vec<String> = gens
                    .iter()
                    .map(|v| format!("[{}]", join(v, ", ")))
                    .collect();
                write!(f, "module {name} = {};", vecs.join(", "))
            }
            StmtKind::Flags { target, flags } => {
                write!(f, "flags {target}")?;
                for (k, v) in flags {
                    write!(f, " {k}={v}")?;
                }
                write!(f, ";")
            }
            StmtKind::Set { key, value } => write!(f, "set {key}={value};"),
            StmtKind::Task {
                kind,
                args,
                options,
            } => {
                write!(f, "task {kind}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                for (k, v) in options {
                    write!(f, " {k}={v}")?;
                }
                write!(f, ";")
            }
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}
