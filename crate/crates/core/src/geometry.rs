//! Hexagonal network geometry: the truncated tri-sectorized lattice,
//! complex-plane helpers, and user-position sampling.
//!
//! Sites live on the triangular lattice δ(m + n e^{iπ/3}); each site carries
//! three sectors whose boresights point at π/3, π and 5π/3. All lengths are
//! kilometres, all angles radians.

use crate::antenna::{sector_envelope_exponent, PatternExponent};
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Complex point in the network plane, in km.
pub type Point = num_complex::Complex64;

// A tiny local complex type would be easy enough, but `num-complex` is what
// neighbouring numeric crates use and it keeps the geometry readable.

/// One lattice site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Site {
    /// Lattice coordinates: position = δ (m + n e^{iπ/3}).
    pub m: i32,
    pub n: i32,
    /// Hexagonal ring index (0 for the origin site).
    pub ring: u32,
    pub position: Point,
}

impl Site {
    pub fn is_origin(&self) -> bool {
        self.m == 0 && self.n == 0
    }
}

/// Sector index 1..=3 with boresight azimuth π/3·(2c−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorId(pub u8);

impl SectorId {
    pub fn azimuth(self) -> f64 {
        std::f64::consts::FRAC_PI_3 * (2.0 * self.0 as f64 - 1.0)
    }
}

pub const SECTORS: [SectorId; 3] = [SectorId(1), SectorId(2), SectorId(3)];

/// The truncated lattice: origin site first, then rings in increasing ring
/// index, each ring ordered by polar angle. Deterministic across runs.
#[derive(Debug, Clone)]
pub struct NetworkLayout {
    pub delta_km: f64,
    pub rings: u32,
    pub sites: Vec<Site>,
}

/// Build all sites with hexagonal ring index ≤ `rings`.
pub fn build_lattice(delta_km: f64, rings: u32) -> Result<NetworkLayout> {
    if !(delta_km > 0.0) || !delta_km.is_finite() {
        return Err(Error::InvalidConfig(format!(
            "inter-site distance delta must be > 0, got {delta_km}"
        )));
    }
    let rot = Point::from_polar(1.0, std::f64::consts::FRAC_PI_3);
    let mut sites = Vec::new();
    let r = rings as i32;
    for m in -r..=r {
        for n in -r..=r {
            let ring = hex_ring(m, n);
            if ring <= rings {
                let position = delta_km * (Point::new(m as f64, 0.0) + n as f64 * rot);
                sites.push(Site {
                    m,
                    n,
                    ring,
                    position,
                });
            }
        }
    }
    sites.sort_by(|a, b| {
        let ka = (a.ring, angle_key(a.position));
        let kb = (b.ring, angle_key(b.position));
        ka.partial_cmp(&kb).expect("angle keys are finite")
    });
    Ok(NetworkLayout {
        delta_km,
        rings,
        sites,
    })
}

/// Hexagonal ring index of lattice coordinates (m, n).
pub fn hex_ring(m: i32, n: i32) -> u32 {
    m.abs().max(n.abs()).max((m + n).abs()) as u32
}

fn angle_key(p: Point) -> f64 {
    if p.norm_sqr() == 0.0 {
        return 0.0;
    }
    let a = p.arg();
    // map (-pi, pi] to [0, 2pi) so ring ordering starts on the +x axis
    if a < 0.0 {
        a + 2.0 * std::f64::consts::PI
    } else {
        a
    }
}

impl NetworkLayout {
    pub fn origin(&self) -> &Site {
        &self.sites[0]
    }

    pub fn interfering_sites(&self) -> impl Iterator<Item = &Site> {
        self.sites.iter().filter(|s| !s.is_origin())
    }
}

/// Principal argument of (z − s), in (−π, π].
pub fn arg_between(z: Point, s: Point) -> Result<f64> {
    let d = z - s;
    if d.norm_sqr() == 0.0 {
        return Err(Error::DegenerateGeometry(format!(
            "arg_between called with coincident points ({}, {})",
            z.re, z.im
        )));
    }
    Ok(d.arg())
}

/// A mobile position expressed relative to its serving site.
#[derive(Debug, Clone, Copy)]
pub struct MobilePlacement {
    pub site_position: Point,
    pub sector: SectorId,
    /// Distance from the serving site, km.
    pub r: f64,
    /// Complex argument relative to the serving site.
    pub theta: f64,
    pub position: Point,
}

impl MobilePlacement {
    pub fn new(site_position: Point, sector: SectorId, r: f64, theta: f64) -> Self {
        let position = site_position + Point::from_polar(r, theta);
        Self {
            site_position,
            sector,
            r,
            theta,
            position,
        }
    }
}

/// Radial bound of the interferer placement law: (2δ/3)·U(θ−ϑ_c), where U is
/// the 65° sector envelope pattern.
pub fn radial_bound(delta_km: f64, theta_offset: f64, envelope: PatternExponent) -> f64 {
    (2.0 * delta_km / 3.0) * envelope.gain(theta_offset)
}

/// Draw an interfering-user placement: θ uniform on the sector arc, then r
/// uniform on [0, (2δ/3) U(θ−ϑ_c)].
pub fn sample_interferer_position<R: Rng + ?Sized>(
    site_position: Point,
    sector: SectorId,
    delta_km: f64,
    envelope: PatternExponent,
    rng: &mut R,
) -> MobilePlacement {
    let az = sector.azimuth();
    let theta = rng.gen_range(az - std::f64::consts::FRAC_PI_3..az + std::f64::consts::FRAC_PI_3);
    let bound = radial_bound(delta_km, theta - az, envelope);
    let r = rng.gen_range(0.0..bound.max(f64::MIN_POSITIVE));
    MobilePlacement::new(site_position, sector, r, theta)
}

/// The hexagonal cell polygon served by one sector. The site sits on one
/// vertex; the far vertex lies at 2δ/3 along the boresight.
pub fn sector_hexagon(site_position: Point, sector: SectorId, delta_km: f64) -> [Point; 6] {
    let az = sector.azimuth();
    let center = site_position + Point::from_polar(delta_km / 3.0, az);
    let mut v = [Point::new(0.0, 0.0); 6];
    for (j, out) in v.iter_mut().enumerate() {
        *out = center
            + Point::from_polar(
                delta_km / 3.0,
                az + std::f64::consts::PI + j as f64 * std::f64::consts::FRAC_PI_3,
            );
    }
    v
}

/// Point-in-convex-polygon test (vertices in counter-clockwise order).
pub fn inside_convex(poly: &[Point], p: Point) -> bool {
    let n = poly.len();
    for i in 0..n {
        let e = poly[(i + 1) % n] - poly[i];
        let v = p - poly[i];
        if e.re * v.im - e.im * v.re < 0.0 {
            return false;
        }
    }
    true
}

/// Serving-user placement law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ServingUserLaw {
    /// Uniform over the hexagonal cell area (rejection sampling).
    #[default]
    AreaUniform,
    /// Same radial law as interfering users.
    Radial,
}

/// Draw the tagged user inside the sector's hexagonal cell.
pub fn sample_serving_user<R: Rng + ?Sized>(
    site_position: Point,
    sector: SectorId,
    delta_km: f64,
    law: ServingUserLaw,
    rng: &mut R,
) -> MobilePlacement {
    match law {
        ServingUserLaw::Radial => sample_interferer_position(
            site_position,
            sector,
            delta_km,
            sector_envelope_exponent(),
            rng,
        ),
        ServingUserLaw::AreaUniform => {
            let poly = sector_hexagon(site_position, sector, delta_km);
            let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
            for p in &poly {
                xmin = xmin.min(p.re);
                xmax = xmax.max(p.re);
                ymin = ymin.min(p.im);
                ymax = ymax.max(p.im);
            }
            loop {
                let p = Point::new(rng.gen_range(xmin..xmax), rng.gen_range(ymin..ymax));
                if inside_convex(&poly, p) {
                    let rel = p - site_position;
                    let r = rel.norm();
                    if r > 0.0 {
                        return MobilePlacement {
                            site_position,
                            sector,
                            r,
                            theta: rel.arg(),
                            position: p,
                        };
                    }
                }
            }
        }
    }
}
