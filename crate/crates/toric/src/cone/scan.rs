//! Enumeration of cone lattice points at a fixed height, by depth-first
//! search over the coordinates. Every facet form is kept as a running partial
//! value; each coordinate gets a feasible interval `[lb, ub]` from the forms,
//! so a branch dies as soon as some form can no longer reach the threshold,
//! and every visited leaf satisfies all forms.

use super::ConeError;

pub struct HeightScan<'a> {
    n: usize,
    forms: &'a [Vec<i64>],
    /// suffix_pos[f][i] = sum of positive coefficients of form f over coords i..n-1
    suffix_pos: Vec<Vec<i64>>,
}

pub enum Step {
    Continue,
    Stop,
}

impl<'a> HeightScan<'a> {
    pub fn new(n: usize, forms: &'a [Vec<i64>]) -> Self {
        let suffix_pos = forms
            .iter()
            .map(|f| {
                let mut s = vec![0i64; n + 1];
                for i in (0..n).rev() {
                    s[i] = s[i + 1] + f[i].max(0);
                }
                s
            })
            .collect();
        HeightScan { n, forms, suffix_pos }
    }

    /// Visits every `u` in `[0,k]^n x {k}` with `f(u) >= threshold` for all
    /// facet forms `f`. The callback also receives the form values at `u`.
    /// `budget` caps the number of visited lattice points.
    pub fn enumerate(
        &self,
        k: u32,
        threshold: i64,
        budget: &mut u64,
        visit: &mut dyn FnMut(&[i64], &[i64]) -> Step,
    ) -> Result<(), ConeError> {
        let kk = i64::from(k);
        let mut u = vec![0i64; self.n + 1];
        u[self.n] = kk;
        let mut evals: Vec<i64> = self.forms.iter().map(|f| f[self.n] * kk).collect();
        self.dfs(0, kk, threshold, &mut u, &mut evals, budget, visit)
            .map(|_| ())
    }

    fn dfs(
        &self,
        i: usize,
        k: i64,
        threshold: i64,
        u: &mut Vec<i64>,
        evals: &mut Vec<i64>,
        budget: &mut u64,
        visit: &mut dyn FnMut(&[i64], &[i64]) -> Step,
    ) -> Result<Step, ConeError> {
        if i == self.n {
            if *budget == 0 {
                return Err(ConeError::SizeCapExceeded);
            }
            *budget -= 1;
            return Ok(visit(u, evals));
        }
        // feasible interval for u_i so that every form can still reach the
        // threshold using at most k per later coordinate
        let mut lb = 0i64;
        let mut ub = k;
        for (f, form) in self.forms.iter().enumerate() {
            let c = form[i];
            let slack = evals[f] + self.suffix_pos[f][i + 1] * k - threshold;
            if c < 0 {
                if slack < 0 {
                    return Ok(Step::Continue);
                }
                ub = ub.min(slack / (-c));
            } else if c > 0 {
                if slack < 0 {
                    lb = lb.max((-slack + c - 1) / c);
                }
            } else if slack < 0 {
                return Ok(Step::Continue);
            }
        }
        if lb > ub {
            return Ok(Step::Continue);
        }
        for (f, form) in self.forms.iter().enumerate() {
            evals[f] += form[i] * lb;
        }
        let mut v = lb;
        loop {
            u[i] = v;
            if let Step::Stop = self.dfs(i + 1, k, threshold, u, evals, budget, visit)? {
                for (f, form) in self.forms.iter().enumerate() {
                    evals[f] -= form[i] * v;
                }
                u[i] = 0;
                return Ok(Step::Stop);
            }
            if v == ub {
                break;
            }
            v += 1;
            for (f, form) in self.forms.iter().enumerate() {
                evals[f] += form[i];
            }
        }
        for (f, form) in self.forms.iter().enumerate() {
            evals[f] -= form[i] * ub;
        }
        u[i] = 0;
        Ok(Step::Continue)
    }
}
