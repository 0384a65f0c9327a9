use equivariant::{BrownVariant, SubgroupAPoset};
use num_bigint::BigInt;
use permcore::p_part;
use serde_json::{json, Value};
use subgroups::GroupPair;

use crate::check::{checks_json, ensure, Check};
use crate::local::as_group;
use crate::OrbitError;

/// Reduced Euler characteristics of the centralized Brown poset `C_S(A)`
/// and of its left ideals cut out by `C_K(A)`, for a p-regular A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecomposition {
    /// `chi~(C_S(A))`
    pub centralized: BigInt,
    /// `chi~(S_{C_G(A)})`
    pub centralizer_brown: BigInt,
    /// `chi~({K : C_K(A) != K})`
    pub moved: BigInt,
    /// `chi~({K : 1 != C_K(A) != K})`
    pub middle: BigInt,
    /// `chi~({K : C_K(A) != 1})`
    pub meets_centralizer: BigInt,
    /// `|C_G(A)|_p`
    pub centralizer_p_part: BigInt,
    /// whether every member has `C_K(A) != 1`
    pub every_member_meets: bool,
    pub checks: Vec<Check>,
}

impl IdealDecomposition {
    pub fn row(&self) -> [BigInt; 5] {
        [
            self.centralized.clone(),
            self.centralizer_brown.clone(),
            self.moved.clone(),
            self.middle.clone(),
            self.centralizer_p_part.clone(),
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "centralized": self.centralized.to_string(),
            "centralizer_brown": self.centralizer_brown.to_string(),
            "moved": self.moved.to_string(),
            "middle": self.middle.to_string(),
            "meets_centralizer": self.meets_centralizer.to_string(),
            "centralizer_p_part": self.centralizer_p_part.to_string(),
            "checks": checks_json(&self.checks),
        })
    }
}

/// Splits `C_S(A)` into the left ideals `{[K,A] != 1}` and `{C_K(A) != 1}`
/// and checks Mayer-Vietoris, the identification of the second ideal with
/// the Brown poset of `C_G(A)`, and the congruence modulo `|C_G(A)|_p`.
pub fn ideal_decomposition(
    pair: &GroupPair<'_>,
    p: u64,
    variant: BrownVariant,
    cap: usize,
) -> Result<IdealDecomposition, OrbitError> {
    let a_order = pair.acting().order() as u64;
    if a_order % p == 0 {
        return Err(OrbitError::Unsupported(format!("the acting group has order {a_order}, divisible by {p}")));
    }
    let g = pair.group();
    let ap = SubgroupAPoset::brown(pair, p, variant, cap)?;
    let fixed = ap.fixed_by(&ap.all(), pair.acting().generator_indices());
    let cent_order: Vec<usize> = ap.members().iter().map(|k| pair.centralizer_in(k).order()).collect();
    let reduced = |idx: &[usize]| ap.euler(idx).map(|e| e - 1);
    let pick = |keep: &dyn Fn(usize) -> bool| fixed.iter().copied().filter(|&i| keep(i)).collect::<Vec<_>>();

    let moved_idx = pick(&|i| cent_order[i] != ap.members()[i].order());
    let meets_idx = pick(&|i| cent_order[i] != 1);
    let middle_idx = pick(&|i| cent_order[i] != 1 && cent_order[i] != ap.members()[i].order());

    let centralized = reduced(&fixed)?;
    let moved = reduced(&moved_idx)?;
    let middle = reduced(&middle_idx)?;
    let meets_centralizer = reduced(&meets_idx)?;

    let cg = pair.centralizer();
    let cgroup = as_group(g, &cg)?;
    let inner = GroupPair::inner(&cgroup);
    let cap_brown = SubgroupAPoset::brown(&inner, p, BrownVariant::Radical, cap)?;
    let centralizer_brown = cap_brown.euler(&cap_brown.all())? - 1;
    let centralizer_p_part = BigInt::from(p_part(cg.order() as u64, p));
    let every_member_meets = meets_idx.len() == fixed.len();

    let mut checks = vec![
        Check::equal("chi~{C_K(A) != 1} = chi~(S_{C_G(A)})", &meets_centralizer, &centralizer_brown),
        Check::equal("Mayer-Vietoris", &centralized, &(&moved + &meets_centralizer - &middle)),
        Check::equal(
            "chi~(C_S(A)) - chi~(S_{C_G(A)}) = chi~{C_K(A) != K} - chi~{1 != C_K(A) != K}",
            &(&centralized - &centralizer_brown),
            &(&moved - &middle),
        ),
        Check::divides("|C_G(A)|_p divides chi~{C_K(A) != K} - chi~{1 != C_K(A) != K}", &centralizer_p_part, &(&moved - &middle)),
    ];
    if every_member_meets {
        checks.push(Check::equal("chi~(S_{C_G(A)}) = chi~(C_S(A))", &centralizer_brown, &centralized));
    }
    ensure(&checks)?;
    Ok(IdealDecomposition {
        centralized,
        centralizer_brown,
        moved,
        middle,
        meets_centralizer,
        centralizer_p_part,
        every_member_meets,
        checks,
    })
}
