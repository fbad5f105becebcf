//! Executions: firing sequences with recorded contexts, their sequential and
//! parallel composition, whiskering by idle tokens, and the two premonoidal
//! tensors on a fixed catalyst grade.
//!
//! Every step records the transition fired and the residual context — the
//! tokens left untouched at that instant. Execution equality is
//! step-sequence equality, the finest reading; the coarser certificates
//! (endpoints, Parikh vector, grade) are exposed separately.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::net::{CatalystGrade, Marking, PetriNet};
use crate::{Error, Result};

/// One firing: the transition and the residual context at firing time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub transition: usize,
    pub context: Marking,
}

/// A firing sequence from a start marking, with contexts recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Execution {
    start: Marking,
    steps: Vec<Step>,
    end: Marking,
}

impl Execution {
    /// The empty execution: the identity process on a marking.
    pub fn identity(marking: Marking) -> Execution {
        Execution {
            start: marking.clone(),
            steps: Vec::new(),
            end: marking,
        }
    }

    /// Fires one transition from `start`.
    pub fn single(net: &PetriNet, start: Marking, transition: usize) -> Result<Execution> {
        Execution::identity(start).then_fire(net, transition)
    }

    /// Extends an execution by firing one more transition at its end.
    pub fn then_fire(mut self, net: &PetriNet, transition: usize) -> Result<Execution> {
        let end = net.fire(&self.end, transition)?;
        let context = self.end.sub(&net.transition(transition).source)?;
        self.steps.push(Step {
            transition,
            context,
        });
        self.end = end;
        Ok(self)
    }

    /// Runs a named firing sequence from a start marking.
    pub fn from_firings(net: &PetriNet, start: Marking, firings: &[usize]) -> Result<Execution> {
        firings
            .iter()
            .try_fold(Execution::identity(start), |acc, &t| acc.then_fire(net, t))
    }

    pub fn start(&self) -> &Marking {
        &self.start
    }

    pub fn end(&self) -> &Marking {
        &self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Start marking and then the marking after each step.
    pub fn trajectory(&self, net: &PetriNet) -> Result<Vec<Marking>> {
        let mut out = vec![self.start.clone()];
        let mut current = self.start.clone();
        for step in &self.steps {
            current = net.fire(&current, step.transition)?;
            out.push(current.clone());
        }
        Ok(out)
    }

    /// Recomputes the end marking from the steps and checks it against the
    /// stored end.
    pub fn validate(&self, net: &PetriNet) -> Result<()> {
        let trajectory = self.trajectory(net)?;
        let computed = trajectory.last().expect("trajectory is nonempty");
        if *computed != self.end {
            return Err(Error::BoundaryMismatch(format!(
                "stored end {:?} differs from recomputed {:?}",
                self.end, computed
            )));
        }
        for (step, marking) in self.steps.iter().zip(&trajectory) {
            let expected = marking.sub(&net.transition(step.transition).source)?;
            if expected != step.context {
                return Err(Error::BoundaryMismatch(format!(
                    "recorded context {:?} differs from {:?}",
                    step.context, expected
                )));
            }
        }
        Ok(())
    }

    /// How many times each transition fires.
    pub fn parikh_vector(&self, net: &PetriNet) -> Vec<u64> {
        let mut counts = vec![0u64; net.transitions().len()];
        for step in &self.steps {
            counts[step.transition] += 1;
        }
        counts
    }

    /// The catalyst grade of the start marking (invariant along the run).
    pub fn grade(&self, net: &PetriNet, chosen: &BTreeSet<usize>) -> Result<CatalystGrade> {
        net.grade(chosen, &self.start)
    }

    /// Sequential composition: runs `self`, then `second` from `self`'s end.
    pub fn compose(&self, second: &Execution) -> Result<Execution> {
        if self.end != second.start {
            return Err(Error::BoundaryMismatch(format!(
                "end {:?} does not meet start {:?}",
                self.end, second.start
            )));
        }
        let mut steps = self.steps.clone();
        steps.extend(second.steps.iter().cloned());
        Ok(Execution {
            start: self.start.clone(),
            steps,
            end: second.end.clone(),
        })
    }

    /// Widens every context by `extra` idle tokens, shifting start and end.
    pub fn whisker(&self, extra: &Marking) -> Result<Execution> {
        Ok(Execution {
            start: self.start.add(extra)?,
            steps: self
                .steps
                .iter()
                .map(|s| {
                    Ok(Step {
                        transition: s.transition,
                        context: s.context.add(extra)?,
                    })
                })
                .collect::<Result<_>>()?,
            end: self.end.add(extra)?,
        })
    }

    /// Parallel sum: a chosen representative of the tensor, running `self`
    /// first alongside `other`'s start, then `other` alongside `self`'s end.
    pub fn tensor(&self, other: &Execution) -> Result<Execution> {
        let first = self.whisker(&other.start)?;
        let second = other.whisker(&self.end)?;
        first.compose(&second)
    }
}

/// The order in which a premonoidal tensor serializes its two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TensorOrder {
    /// Run the left process first, then the right.
    LeftFirst,
    /// Run the right process first, then the left.
    RightFirst,
}

/// The premonoidal tensor on executions of one catalyst grade: the two
/// processes share the catalysts, so they run in sequence in the chosen
/// order. The two orders give the same endpoints and Parikh vector but in
/// general different step sequences — this tensor does not satisfy the
/// interchange law.
pub fn premonoidal_tensor(
    net: &PetriNet,
    chosen: &BTreeSet<usize>,
    left: &Execution,
    right: &Execution,
    order: TensorOrder,
) -> Result<Execution> {
    let grade_left = left.grade(net, chosen)?;
    let grade_right = right.grade(net, chosen)?;
    if grade_left != grade_right {
        return Err(Error::GradeMismatch(format!(
            "left grade {grade_left:?} vs right grade {grade_right:?}"
        )));
    }
    // the shared catalysts, as a marking
    let mut shared = Marking::zero(net.species_count());
    let mut coeffs = shared.coeffs().to_vec();
    for &(s, c) in grade_left.coeffs() {
        coeffs[s] = c;
    }
    shared = Marking::from_coeffs(coeffs);

    let left_rest_start = left.start().sub(&shared)?;
    let left_rest_end = left.end().sub(&shared)?;
    let right_rest_start = right.start().sub(&shared)?;
    let right_rest_end = right.end().sub(&shared)?;

    match order {
        TensorOrder::LeftFirst => {
            let first = left.whisker(&right_rest_start)?;
            let second = right.whisker(&left_rest_end)?;
            first.compose(&second)
        }
        TensorOrder::RightFirst => {
            let first = right.whisker(&left_rest_start)?;
            let second = left.whisker(&right_rest_end)?;
            first.compose(&second)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::parse_petri;

    fn small_net() -> PetriNet {
        parse_petri("tau1: a + b -> c\ntau2: c -> 2b\n").unwrap().0
    }

    fn transport_net() -> PetriNet {
        parse_petri("tau1: a + 2c -> a + 2d\ntau2: b + d -> b + e\n")
            .unwrap()
            .0
    }

    #[test]
    fn compose_the_two_firings() {
        let net = small_net();
        let start = net.parse_marking("2a + b").unwrap();
        let first = Execution::single(&net, start.clone(), 0).unwrap();
        assert_eq!(net.marking_to_text(first.end()), "a + c");
        let second = Execution::single(&net, first.end().clone(), 1).unwrap();
        let both = first.compose(&second).unwrap();
        assert_eq!(net.marking_to_text(both.start()), "2a + b");
        assert_eq!(net.marking_to_text(both.end()), "a + 2b");
        assert_eq!(both.len(), 2);
        both.validate(&net).unwrap();

        // mismatched boundaries are rejected
        let third = Execution::identity(start);
        assert!(both.compose(&third).is_err());
    }

    #[test]
    fn tensor_with_empty_identity() {
        let net = small_net();
        let start = net.parse_marking("a + b").unwrap();
        let run = Execution::single(&net, start, 0).unwrap();
        let nothing = Execution::identity(Marking::zero(3));
        assert_eq!(run.tensor(&nothing).unwrap(), run);
        assert_eq!(nothing.tensor(&run).unwrap(), run);
    }

    #[test]
    fn whisker_examples() {
        let net = transport_net();
        // one boat carries one person; another boat stands by
        let start = net.parse_marking("b + d").unwrap();
        let boat = Execution::single(&net, start, 1).unwrap();
        let idle_boat = net.parse_marking("b").unwrap();
        let whiskered = boat.whisker(&idle_boat).unwrap();
        // species render in first-appearance order: a, c, d, b, e
        assert_eq!(net.marking_to_text(whiskered.start()), "d + 2b");
        assert_eq!(net.marking_to_text(whiskered.end()), "2b + e");
        assert_eq!(net.marking_to_text(&whiskered.steps()[0].context), "b");
        whiskered.validate(&net).unwrap();

        // whiskering by nothing changes nothing, and the Parikh vector is
        // untouched either way
        assert_eq!(boat.whisker(&Marking::zero(5)).unwrap(), boat);
        assert_eq!(whiskered.parikh_vector(&net), boat.parikh_vector(&net));
    }

    #[test]
    fn grade_additivity_under_tensor() {
        let net = transport_net();
        let chosen = net.catalysts();
        let left = Execution::single(&net, net.parse_marking("a + 2c").unwrap(), 0).unwrap();
        let right = Execution::single(&net, net.parse_marking("b + d").unwrap(), 1).unwrap();
        let both = left.tensor(&right).unwrap();
        let sum = left
            .grade(&net, &chosen)
            .unwrap()
            .add(&right.grade(&net, &chosen).unwrap())
            .unwrap();
        assert_eq!(both.grade(&net, &chosen).unwrap(), sum);
        both.validate(&net).unwrap();
    }

    #[test]
    fn premonoidal_orders_differ_as_step_sequences() {
        let net = transport_net();
        let chosen = net.catalysts();
        // both processes run at grade a + b: a jeep trip idling the boat,
        // and a boat trip idling the jeep
        let jeep = Execution::single(&net, net.parse_marking("a + 2c").unwrap(), 0)
            .unwrap()
            .whisker(&net.parse_marking("b").unwrap())
            .unwrap();
        let boat = Execution::single(&net, net.parse_marking("b + d").unwrap(), 1)
            .unwrap()
            .whisker(&net.parse_marking("a").unwrap())
            .unwrap();

        let lf = premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::LeftFirst).unwrap();
        let rf = premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::RightFirst).unwrap();

        assert_ne!(lf.steps(), rf.steps());
        assert_eq!(lf.start(), rf.start());
        assert_eq!(lf.end(), rf.end());
        assert_eq!(lf.parikh_vector(&net), rf.parikh_vector(&net));
        lf.validate(&net).unwrap();
        rf.validate(&net).unwrap();
    }

    #[test]
    fn premonoidal_with_identity_is_whiskering() {
        let net = transport_net();
        let chosen = net.catalysts();
        let grade_marking = net.parse_marking("a + b").unwrap();
        let jeep = Execution::single(&net, net.parse_marking("a + 2c").unwrap(), 0)
            .unwrap()
            .whisker(&net.parse_marking("b").unwrap())
            .unwrap();
        let idle = Execution::identity(grade_marking);
        let out = premonoidal_tensor(&net, &chosen, &jeep, &idle, TensorOrder::LeftFirst).unwrap();
        assert_eq!(out, jeep);
        let out = premonoidal_tensor(&net, &chosen, &idle, &jeep, TensorOrder::LeftFirst).unwrap();
        assert_eq!(out, jeep);
    }

    #[test]
    fn premonoidal_endpoint_arithmetic() {
        let net = transport_net();
        let chosen = net.catalysts();
        let jeep = Execution::single(&net, net.parse_marking("a + 2c").unwrap(), 0)
            .unwrap()
            .whisker(&net.parse_marking("b").unwrap())
            .unwrap();
        let boat = Execution::single(&net, net.parse_marking("b + d").unwrap(), 1)
            .unwrap()
            .whisker(&net.parse_marking("a").unwrap())
            .unwrap();
        let out = premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::LeftFirst).unwrap();
        // start = i + a-part + a′-part, end = i + b-part + b′-part
        assert_eq!(out.start(), &net.parse_marking("a + b + 2c + d").unwrap());
        assert_eq!(out.end(), &net.parse_marking("a + b + 2d + e").unwrap());
    }

    #[test]
    fn grade_mismatch_is_rejected() {
        let net = transport_net();
        let chosen = net.catalysts();
        let jeep = Execution::single(&net, net.parse_marking("a + 2c").unwrap(), 0).unwrap();
        let boat = Execution::single(&net, net.parse_marking("b + d").unwrap(), 1).unwrap();
        assert!(matches!(
            premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::LeftFirst),
            Err(Error::GradeMismatch(_))
        ));
    }

    #[test]
    fn two_equal_boat_trips_collapse_in_step_sequences() {
        // two single-boat trips of the same shape: the two serializations
        // coincide even as step sequences, because contexts are multisets —
        // distinguishing them needs the individual-token morphisms
        let net = transport_net();
        let chosen = net.catalysts();
        let trip = Execution::single(&net, net.parse_marking("b + d").unwrap(), 1).unwrap();
        let lf = premonoidal_tensor(&net, &chosen, &trip, &trip, TensorOrder::LeftFirst).unwrap();
        let rf = premonoidal_tensor(&net, &chosen, &trip, &trip, TensorOrder::RightFirst).unwrap();
        assert_eq!(lf, rf);
    }
}
