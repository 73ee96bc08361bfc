use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Every identity the verifier knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// Classical Stirling numbers of both kinds are inverse triangles.
    StirlingOrthogonality,
    /// Degenerate Stirling numbers of both kinds are inverse triangles.
    DegenerateStirlingOrthogonality,
    /// Whitney numbers of both kinds are inverse triangles.
    WhitneyOrthogonality,
    /// r-Whitney numbers of both kinds are inverse triangles.
    RWhitneyOrthogonality,
    /// r-Whitney numbers count coloured set partitions.
    WhitneyPartitionOracle,
    /// `phi_{n,lambda}` as a degenerate Stirling sum equals its generating-function coefficient.
    BellTriangleSum,
    /// Dobinski-like series for `phi_{n,lambda}(x)`; floating point.
    Dobinski,
    /// `d_{m,lambda}` as a Whitney sum equals its generating-function coefficient.
    DowlingGeneratingFunction,
    /// Partial degenerate Bell and degenerate Dowling: sum path equals generating-function path.
    FamilyDualPath,
    /// `phi_{n,lambda}(x+y) = sum_l C(n,l) phi_l(x) phi_{n-l}(y)`.
    BellAddition,
    /// Expansion in the `phi` basis through the pairing reconstructs the polynomial.
    BellBasisRoundTrip,
    /// `beta_{n,lambda}(x)` in the `phi` basis.
    BernoulliInBell,
    /// `(x)_{n,lambda}` in the `phi` basis.
    FallingInBell,
    /// Degenerate poly-Bell polynomials in the `phi` basis.
    PolyBellInBell,
    /// `phi_{n,lambda}(x)` in the basis of degenerate Bernoulli polynomials of the second kind.
    BellInBernoulli2,
    /// Expansion in the `d_m` basis through the pairing reconstructs the polynomial.
    DowlingBasisRoundTrip,
    /// `beta_{n,lambda}(x)` in the `d_m` basis.
    BernoulliInDowling,
    /// `(x)_{n,lambda}` in the `d_m` basis.
    FallingInDowling,
    /// `d_{m,lambda}(n,x)` in the `phi` basis.
    DowlingInBell,
    /// `phi_{n,lambda/m}(x/m) = m^{-n} sum_k C(n,k) (-1)_{n-k,lambda} d_{m,lambda}(k,x)`.
    ScaledBellInDowling,
    /// Poly-Bell of order 1 is the degenerate Bernoulli polynomial.
    PolyBellOrderOne,
    /// The `lambda -> 0` limits against classical recursions and partition counts.
    ClassicalLimit,
}

use IdentityId::*;

impl IdentityId {
    /// Suite order.
    pub const ALL: [IdentityId; 22] = [
        StirlingOrthogonality,
        DegenerateStirlingOrthogonality,
        WhitneyOrthogonality,
        RWhitneyOrthogonality,
        WhitneyPartitionOracle,
        BellTriangleSum,
        Dobinski,
        DowlingGeneratingFunction,
        FamilyDualPath,
        BellAddition,
        BellBasisRoundTrip,
        BernoulliInBell,
        FallingInBell,
        PolyBellInBell,
        BellInBernoulli2,
        DowlingBasisRoundTrip,
        BernoulliInDowling,
        FallingInDowling,
        DowlingInBell,
        ScaledBellInDowling,
        PolyBellOrderOne,
        ClassicalLimit,
    ];

    /// Canonical command-line name.
    pub fn name(self) -> &'static str {
        match self {
            StirlingOrthogonality => "stirling-ortho",
            DegenerateStirlingOrthogonality => "deg-stirling-ortho",
            WhitneyOrthogonality => "whitney-ortho",
            RWhitneyOrthogonality => "r-whitney-ortho",
            WhitneyPartitionOracle => "whitney-oracle",
            BellTriangleSum => "lemma1",
            Dobinski => "thm2",
            DowlingGeneratingFunction => "thm3",
            FamilyDualPath => "dual-path",
            BellAddition => "addition",
            BellBasisRoundTrip => "thm4",
            BernoulliInBell => "thm5",
            FallingInBell => "thm6",
            PolyBellInBell => "thm7",
            BellInBernoulli2 => "thm8",
            DowlingBasisRoundTrip => "thm9",
            BernoulliInDowling => "thm10",
            FallingInDowling => "falling-in-dowling",
            DowlingInBell => "thm11",
            ScaledBellInDowling => "closing",
            PolyBellOrderOne => "polybell-k1",
            ClassicalLimit => "limit",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Dobinski => &["thm2-dobinski", "dobinski"],
            DowlingGeneratingFunction => &["thm3-gf"],
            BellBasisRoundTrip => &["thm4-roundtrip"],
            DowlingBasisRoundTrip => &["thm9-roundtrip"],
            PolyBellOrderOne => &["polybell-k1-is-bernoulli"],
            ClassicalLimit => &["limit-lambda0-suite", "limit-suite"],
            _ => &[],
        }
    }

    /// Identities whose two sides do not involve `lambda`.
    pub fn is_lambda_free(self) -> bool {
        matches!(
            self,
            StirlingOrthogonality
                | WhitneyOrthogonality
                | RWhitneyOrthogonality
                | WhitneyPartitionOracle
                | ClassicalLimit
        )
    }

    /// Compared in floating point with a tolerance instead of exactly.
    pub fn is_numerical(self) -> bool {
        self == Dobinski
    }

    pub fn uses_m(self) -> bool {
        matches!(
            self,
            WhitneyOrthogonality
                | RWhitneyOrthogonality
                | WhitneyPartitionOracle
                | DowlingGeneratingFunction
                | FamilyDualPath
                | DowlingBasisRoundTrip
                | BernoulliInDowling
                | FallingInDowling
                | DowlingInBell
                | ScaledBellInDowling
        )
    }

    pub fn uses_k(self) -> bool {
        self == PolyBellInBell
    }

    pub fn uses_r(self) -> bool {
        matches!(self, RWhitneyOrthogonality | WhitneyPartitionOracle)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive; `_` and `-` are interchangeable.
    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key || id.aliases().contains(&key.as_str()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
