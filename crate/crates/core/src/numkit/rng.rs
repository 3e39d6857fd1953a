//! Deterministic keyed random streams.
//!
//! Every stream is a ChaCha20 counter cipher whose 256-bit key is derived by
//! hashing (algorithm id, master seed, client, round, step, purpose). Replaying
//! any client/round/step only needs its key, never the rest of the run, and
//! distinct keys give independent streams.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

const ALGORITHM_ID: &str = "chacha20/sha256-key/box-muller";

/// Identifies what a stream is consumed for, so two draws in the same
/// (client, round, step) never alias.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Purpose {
    TaskGen,
    Partition,
    ClientSample,
    Batch,
    FactorInit,
    NoiseA,
    NoiseB,
    Diagnostic,
    Probe,
    Generic(u32),
}

impl Purpose {
    fn tag(self) -> u32 {
        match self {
            Purpose::TaskGen => 1,
            Purpose::Partition => 2,
            Purpose::ClientSample => 3,
            Purpose::Batch => 4,
            Purpose::FactorInit => 5,
            Purpose::NoiseA => 6,
            Purpose::NoiseB => 7,
            Purpose::Diagnostic => 8,
            Purpose::Probe => 9,
            Purpose::Generic(t) => 1000 + t,
        }
    }
}

/// (client, round, step, purpose) address of one stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub client: u64,
    pub round: u64,
    pub step: u64,
    pub purpose: Purpose,
}

impl StreamKey {
    pub fn new(client: u64, round: u64, step: u64, purpose: Purpose) -> Self {
        Self {
            client,
            round,
            step,
            purpose,
        }
    }

    /// Key with only the purpose set; for run-level draws.
    pub fn tagged(purpose: Purpose) -> Self {
        Self::new(0, 0, 0, purpose)
    }
}

#[derive(Debug, Clone)]
pub struct SeededRng {
    master_seed: u64,
    key: StreamKey,
    inner: ChaCha20Rng,
    spare_gaussian: Option<f64>,
}

impl SeededRng {
    pub fn new(master_seed: u64, key: StreamKey) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(ALGORITHM_ID.as_bytes());
        hasher.update(master_seed.to_le_bytes());
        hasher.update(key.client.to_le_bytes());
        hasher.update(key.round.to_le_bytes());
        hasher.update(key.step.to_le_bytes());
        hasher.update(key.purpose.tag().to_le_bytes());
        let digest = hasher.finalize();
        let mut seed = [0u8; 32];
        seed.copy_from_slice(&digest);
        Self {
            master_seed,
            key,
            inner: ChaCha20Rng::from_seed(seed),
            spare_gaussian: None,
        }
    }

    pub fn algorithm(&self) -> &'static str {
        ALGORITHM_ID
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn key(&self) -> StreamKey {
        self.key
    }

    /// Stream addressed relative to the same master seed.
    pub fn derive(&self, key: StreamKey) -> SeededRng {
        SeededRng::new(self.master_seed, key)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in the open interval (0, 1), 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (((self.next_u64() >> 11) as f64) + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// Standard normal via Box-Muller on the counter stream.
    pub fn next_gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare_gaussian.take() {
            return z;
        }
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare_gaussian = Some(radius * angle.sin());
        radius * angle.cos()
    }

    /// Matrix of i.i.d. N(0, std^2) entries, filled row-major.
    /// std = 0 returns exact zeros without consuming the stream.
    pub fn gaussian_matrix(&mut self, rows: usize, cols: usize, std: f64) -> super::DenseMatrix {
        let mut data = vec![0.0; rows * cols];
        if std > 0.0 {
            for v in data.iter_mut() {
                *v = std * self.next_gaussian();
            }
        }
        super::DenseMatrix::from_data_unchecked(rows, cols, data)
    }

    /// Uniform integer in [0, bound) by rejection, bias-free.
    pub fn next_index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "next_index bound must be positive");
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return (x % bound) as usize;
            }
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_index(i + 1);
            items.swap(i, j);
        }
    }

    /// `count` distinct indices from [0, n), uniform without replacement,
    /// returned in ascending order.
    pub fn sample_without_replacement(&mut self, n: usize, count: usize) -> Vec<usize> {
        assert!(count <= n, "cannot sample {count} of {n} without replacement");
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..count {
            let j = i + self.next_index(n - i);
            pool.swap(i, j);
        }
        let mut picked: Vec<usize> = pool[..count].to_vec();
        picked.sort_unstable();
        picked
    }

    /// Gamma(alpha, 1) via Marsaglia-Tsang, with the alpha < 1 boost.
    pub fn next_gamma(&mut self, alpha: f64) -> f64 {
        assert!(alpha > 0.0, "gamma shape must be positive");
        if alpha < 1.0 {
            let g = self.next_gamma(alpha + 1.0);
            let u = self.next_f64();
            return g * u.powf(1.0 / alpha);
        }
        let d = alpha - 1.0 / 3.0;
        let c = 1.0 / (9.0 * d).sqrt();
        loop {
            let x = self.next_gaussian();
            let v = 1.0 + c * x;
            if v <= 0.0 {
                continue;
            }
            let v3 = v * v * v;
            let u = self.next_f64();
            if u < 1.0 - 0.0331 * x.powi(4) {
                return d * v3;
            }
            if u.ln() < 0.5 * x * x + d * (1.0 - v3 + v3.ln()) {
                return d * v3;
            }
        }
    }

    /// Symmetric Dirichlet(beta * 1_n) draw.
    pub fn next_dirichlet(&mut self, beta: f64, n: usize) -> Vec<f64> {
        let mut gs: Vec<f64> = (0..n).map(|_| self.next_gamma(beta)).collect();
        let total: f64 = gs.iter().sum();
        if total <= 0.0 {
            // all gammas underflowed; fall back to uniform proportions
            return vec![1.0 / n as f64; n];
        }
        for g in gs.iter_mut() {
            *g /= total;
        }
        gs
    }
}
