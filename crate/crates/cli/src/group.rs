//! Group parameter flags and the per-group closed forms.

use clap::{Args, ValueEnum};
use lieclosed::groups::{
    galilei_exp_closed, galilei_reparametrize, lorentz_aux, lorentz_exp_closed, poincare_aux,
    poincare_exp_closed, poincare_reparametrize, su3_determinant, su3_element, su3_exp,
    su3_invariants, GalileiParams, LorentzAux, LorentzParams, PoincareParams, Su3Params, Vec3,
};
use lieclosed::{Complex, SquareMatrix};
use serde_json::{json, Map, Value};

use crate::doc;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Lorentz,
    Poincare,
    Galilei,
    Su3,
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        let x: f64 = p.parse().map_err(|_| format!("'{p}' is not a number"))?;
        if !x.is_finite() {
            return Err(format!("'{p}' is not finite"));
        }
        *slot = x;
    }
    Ok(out)
}

fn parse_triple(s: &str) -> Result<Vec3, String> {
    parse_list::<3>(s)
}

fn parse_octet(s: &str) -> Result<[f64; 8], String> {
    parse_list::<8>(s)
}

fn parse_finite(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("'{s}' is not a finite number")),
    }
}

/// Parameters of a built-in group. Unset parameters are zero.
#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Build the algebra element of a built-in group instead of reading a matrix.
    #[arg(long, value_enum)]
    pub group: Option<GroupKind>,
    /// Rotation angles (radians), x,y,z.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub omega: Option<Vec3>,
    /// Boost rapidities, x,y,z (Lorentz, Poincare).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub zeta: Option<Vec3>,
    /// Boost velocity, x,y,z (Galilei).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub v: Option<Vec3>,
    /// Space translation, x,y,z (Poincare, Galilei).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub a: Option<Vec3>,
    /// Time translation (Poincare, Galilei).
    #[arg(long, value_parser = parse_finite, allow_hyphen_values = true)]
    pub a0: Option<f64>,
    /// Gell-Mann coordinates alpha_1..alpha_8 (SU(3)).
    #[arg(long, value_parser = parse_octet, allow_hyphen_values = true)]
    pub alpha: Option<[f64; 8]>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Group {
    Lorentz(LorentzParams),
    Poincare(PoincareParams),
    Galilei(GalileiParams),
    Su3(Su3Params),
}

impl GroupArgs {
    pub fn any_parameter(&self) -> bool {
        self.omega.is_some()
            || self.zeta.is_some()
            || self.v.is_some()
            || self.a.is_some()
            || self.a0.is_some()
            || self.alpha.is_some()
    }

    /// `None` when no `--group` was given.
    pub fn resolve(&self) -> Result<Option<Group>, CliError> {
        let Some(kind) = self.group else {
            if self.any_parameter() {
                return Err(CliError::Input("group parameters given without --group".into()));
            }
            return Ok(None);
        };
        let allowed: &[&str] = match kind {
            GroupKind::Lorentz => &["omega", "zeta"],
            GroupKind::Poincare => &["omega", "zeta", "a", "a0"],
            GroupKind::Galilei => &["omega", "v", "a", "a0"],
            GroupKind::Su3 => &["alpha"],
        };
        let given = [
            ("omega", self.omega.is_some()),
            ("zeta", self.zeta.is_some()),
            ("v", self.v.is_some()),
            ("a", self.a.is_some()),
            ("a0", self.a0.is_some()),
            ("alpha", self.alpha.is_some()),
        ];
        if let Some((name, _)) = given.iter().find(|(name, set)| *set && !allowed.contains(name)) {
            return Err(CliError::Input(format!(
                "--{name} does not apply to --group {}",
                kind.to_possible_value().unwrap().get_name()
            )));
        }
        let omega = self.omega.unwrap_or_default();
        let zeta = self.zeta.unwrap_or_default();
        let a = self.a.unwrap_or_default();
        let a0 = self.a0.unwrap_or_default();
        Ok(Some(match kind {
            GroupKind::Lorentz => Group::Lorentz(LorentzParams { omega, zeta }),
            GroupKind::Poincare => Group::Poincare(PoincareParams { omega, zeta, a, a0 }),
            GroupKind::Galilei => Group::Galilei(GalileiParams { omega, v: self.v.unwrap_or_default(), a, a0 }),
            GroupKind::Su3 => Group::Su3(Su3Params::new(self.alpha.unwrap_or_default())),
        }))
    }
}

impl Group {
    pub fn name(&self) -> &'static str {
        match self {
            Group::Lorentz(_) => "lorentz",
            Group::Poincare(_) => "poincare",
            Group::Galilei(_) => "galilei",
            Group::Su3(_) => "su3",
        }
    }

    pub fn echo(&self) -> Value {
        match self {
            Group::Lorentz(p) => json!({ "group": self.name(), "omega": p.omega, "zeta": p.zeta }),
            Group::Poincare(p) => json!({
                "group": self.name(), "omega": p.omega, "zeta": p.zeta, "a": p.a, "a0": p.a0
            }),
            Group::Galilei(p) => json!({
                "group": self.name(), "omega": p.omega, "v": p.v, "a": p.a, "a0": p.a0
            }),
            Group::Su3(p) => json!({ "group": self.name(), "alpha": p.alpha }),
        }
    }

    /// The algebra element: `A` for the space-time groups, `W` for SU(3).
    pub fn algebra(&self) -> SquareMatrix {
        match self {
            Group::Lorentz(p) => p.algebra(),
            Group::Poincare(p) => p.algebra(),
            Group::Galilei(p) => p.algebra(),
            Group::Su3(p) => su3_element(p),
        }
    }

    /// The matrix whose exponential is the group element: `A`, or `iW/2`
    /// for SU(3).
    pub fn generator(&self) -> SquareMatrix {
        match self {
            Group::Su3(p) => su3_element(p).scale(Complex::new(0.0, 0.5)),
            _ => self.algebra(),
        }
    }

    pub fn exp_closed(&self) -> Result<SquareMatrix, CliError> {
        let real = match self {
            Group::Lorentz(p) => lorentz_exp_closed(p)?,
            Group::Poincare(p) => poincare_exp_closed(p)?,
            Group::Galilei(p) => galilei_exp_closed(p)?,
            Group::Su3(p) => return Ok(su3_exp(p)?),
        };
        Ok(SquareMatrix::from_real(&real)?)
    }

    /// Group-specific auxiliary quantities and the reparametrised element.
    pub fn details(&self) -> Result<Map<String, Value>, CliError> {
        let mut out = Map::new();
        match self {
            Group::Lorentz(p) => {
                out.insert("aux".into(), lorentz_json(&lorentz_aux(p)));
            }
            Group::Poincare(p) => {
                let aux = poincare_aux(p);
                let mut obj = lorentz_json(&aux.lorentz);
                let map = obj.as_object_mut().expect("object");
                map.insert("p".into(), json!(aux.p));
                map.insert("k".into(), json!(aux.k));
                map.insert("m".into(), json!(aux.m));
                out.insert("aux".into(), obj);
                let (lambda, a) = poincare_reparametrize(&poincare_exp_closed(p)?)?;
                out.insert(
                    "reparametrized".into(),
                    json!({ "lambda": doc::real_matrix(&lambda), "a": a }),
                );
            }
            Group::Galilei(p) => {
                let omega = (p.omega.iter().map(|x| x * x).sum::<f64>()).sqrt();
                out.insert("aux".into(), json!({ "omega_norm": omega }));
                let e = galilei_reparametrize(&galilei_exp_closed(p)?)?;
                out.insert(
                    "reparametrized".into(),
                    json!({
                        "r": doc::real_matrix(&e.r),
                        "v_prime": e.v_prime,
                        "a_prime": e.a_prime,
                        "a0": e.a0,
                    }),
                );
            }
            Group::Su3(p) => {
                let (phi2, phi3) = su3_invariants(p);
                out.insert(
                    "aux".into(),
                    json!({ "phi2": phi2, "phi3": phi3, "det_w": su3_determinant(p) }),
                );
            }
        }
        Ok(out)
    }
}

fn lorentz_json(aux: &LorentzAux) -> Value {
    json!({
        "f1": aux.f1,
        "f2": aux.f2,
        "u": doc::complex(aux.u),
        "v": doc::complex(aux.v),
    })
}
