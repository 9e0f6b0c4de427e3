//! The quartics the fiber computations are about.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forms::{TernaryForm, VariableFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedQuartic {
    Fer,
    FerDual,
    C0,
    C1,
    C2,
    C3,
    D,
    Q,
    Klein,
}

impl NamedQuartic {
    pub const ALL: [NamedQuartic; 9] = [
        NamedQuartic::Fer,
        NamedQuartic::FerDual,
        NamedQuartic::C0,
        NamedQuartic::C1,
        NamedQuartic::C2,
        NamedQuartic::C3,
        NamedQuartic::D,
        NamedQuartic::Q,
        NamedQuartic::Klein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedQuartic::Fer => "Fer",
            NamedQuartic::FerDual => "Fer'",
            NamedQuartic::C0 => "C0",
            NamedQuartic::C1 => "C1",
            NamedQuartic::C2 => "C2",
            NamedQuartic::C3 => "C3",
            NamedQuartic::D => "D",
            NamedQuartic::Q => "Q",
            NamedQuartic::Klein => "Klein",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            NamedQuartic::Fer => "x^4 + y^4 + z^4",
            NamedQuartic::FerDual => "u^4 + v^4 + w^4",
            NamedQuartic::C0 => "(x^4 + y^4 + z^4) - 6*(x^2*y^2 + x^2*z^2 + y^2*z^2)",
            NamedQuartic::C1 => "(x^4 + y^4 + z^4) - 6*(x^2*y^2 - x^2*z^2 - y^2*z^2)",
            NamedQuartic::C2 => "(x^4 + y^4 + z^4) - 6*(-x^2*y^2 + x^2*z^2 - y^2*z^2)",
            NamedQuartic::C3 => "(x^4 + y^4 + z^4) - 6*(-x^2*y^2 - x^2*z^2 + y^2*z^2)",
            NamedQuartic::D => "u^3*(v + w) + v^3*(u + w) + w^3*(u + v)",
            NamedQuartic::Q => {
                "(x^4 + y^4 + z^4) - 4*(x^3*(y + z) + y^3*(x + z) + z^3*(x + y)) \
                 + 6*(x^2*y^2 + x^2*z^2 + y^2*z^2) - 12*x*y*z*(x + y + z)"
            }
            NamedQuartic::Klein => "x^3*y + y^3*z + z^3*x",
        }
    }

    pub fn family(self) -> VariableFamily {
        match self {
            NamedQuartic::FerDual | NamedQuartic::D => VariableFamily::Dual,
            _ => VariableFamily::Primal,
        }
    }

    pub fn form(self) -> TernaryForm {
        TernaryForm::parse(self.text(), self.family()).expect("built-in quartic parses")
    }
}

impl fmt::Display for NamedQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedQuartic {
    type Err = Error;

    /// Accepts the display names; `Fer'` may also be spelled `FerDual`.
    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("ferdual") {
            return Ok(NamedQuartic::FerDual);
        }
        NamedQuartic::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownQuartic(s.to_string()))
    }
}

pub fn named_quartic(name: &str) -> Result<(NamedQuartic, TernaryForm)> {
    let q: NamedQuartic = name.parse()?;
    Ok((q, q.form()))
}
