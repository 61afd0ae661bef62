//! C ABI over `iaa-core`.
//!
//! Objects cross the boundary as opaque pointers (`IaaIntervalSet`,
//! `IaaFuzzyNumber`) that the caller frees with the matching `*_free`
//! function. Fallible calls return an `IaaStatus`; on failure the message is
//! available from `iaa_last_error_message` until the next failing call on the
//! same thread. Strings returned by the library are freed with
//! `iaa_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use iaa_core::attributes::{agreement_ratio, area, centroid, height, perimeter};
use iaa_core::ranking::{ideal_ratio, universal_compare};
use iaa_core::similarity::similarity;
use iaa_core::{Error, FuzzyNumber, Interval, IntervalSet, Measure, ScaleConfig, SimilarityWeights};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IaaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Bad argument: invalid UTF-8, unknown measure, index out of range.
    InvalidArgument = 2,
    /// Interval, scale or weight validation failed.
    InvalidInput = 3,
    /// A ratio or score is undefined (zero denominator).
    Undefined = 4,
    /// File could not be read or parsed.
    Io = 5,
    /// The library panicked; this is a bug.
    Internal = 99,
}

/// Similarity measure selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IaaMeasure {
    Jaccard = 0,
    Attribute = 1,
    Combined = 2,
}

impl From<IaaMeasure> for Measure {
    fn from(m: IaaMeasure) -> Measure {
        match m {
            IaaMeasure::Jaccard => Measure::Jaccard,
            IaaMeasure::Attribute => Measure::Attribute,
            IaaMeasure::Combined => Measure::Combined,
        }
    }
}

/// One region of a fuzzy number: membership `height` on `[left, right]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IaaRegion {
    pub left: f64,
    pub right: f64,
    pub height: f64,
}

/// Opaque collection of intervals under construction.
pub struct IaaIntervalSet {
    label: String,
    intervals: Vec<Interval>,
}

/// Opaque fuzzy number.
pub struct IaaFuzzyNumber(FuzzyNumber);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> IaaStatus {
    match e {
        Error::DivisionByZero { .. } | Error::EmptyEvaluation => IaaStatus::Undefined,
        Error::Io { .. } | Error::MalformedRow { .. } | Error::InvalidRow { .. } | Error::EmptyDataset(_) => {
            IaaStatus::Io
        }
        Error::InvalidArgument(_) | Error::UnknownLabel { .. } => IaaStatus::InvalidArgument,
        _ => IaaStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard<F>(f: F) -> IaaStatus
where
    F: FnOnce() -> Result<(), (IaaStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IaaStatus::Ok,
        Ok(Err((status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            IaaStatus::Internal
        }
    }
}

fn core<T>(r: iaa_core::Result<T>) -> Result<T, (IaaStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (IaaStatus, String) {
    (IaaStatus::NullPointer, "null pointer argument".into())
}

unsafe fn as_ref<'a, T>(p: *const T) -> Result<&'a T, (IaaStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, (IaaStatus, String)> {
    p.as_mut().ok_or_else(null)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (IaaStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (IaaStatus::InvalidArgument, "string is not valid UTF-8".into()))
}

fn scale(min: f64, max: f64) -> Result<ScaleConfig, (IaaStatus, String)> {
    core(ScaleConfig::new(min, max))
}

/// Message of the last failure on this thread, or null. Owned by the library;
/// valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn iaa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by the library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn iaa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// New empty interval set. `label` may be null.
#[no_mangle]
pub unsafe extern "C" fn iaa_interval_set_new(label: *const c_char) -> *mut IaaIntervalSet {
    let label = if label.is_null() {
        String::new()
    } else {
        match read_str(label) {
            Ok(s) => s.to_owned(),
            Err((_, m)) => {
                set_last_error(m);
                return ptr::null_mut();
            }
        }
    };
    Box::into_raw(Box::new(IaaIntervalSet { label, intervals: Vec::new() }))
}

#[no_mangle]
pub unsafe extern "C" fn iaa_interval_set_push(set: *mut IaaIntervalSet, left: f64, right: f64) -> IaaStatus {
    guard(|| {
        let set = out(set)?;
        set.intervals.push(core(Interval::new(left, right))?);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn iaa_interval_set_len(set: *const IaaIntervalSet) -> usize {
    set.as_ref().map_or(0, |s| s.intervals.len())
}

#[no_mangle]
pub unsafe extern "C" fn iaa_interval_set_free(set: *mut IaaIntervalSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Builds the fuzzy number of `set` on the scale `[scale_min, scale_max]`.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_construct(
    set: *const IaaIntervalSet,
    scale_min: f64,
    scale_max: f64,
    out_fz: *mut *mut IaaFuzzyNumber,
) -> IaaStatus {
    guard(|| {
        let set = as_ref(set)?;
        let slot = out(out_fz)?;
        let scale = scale(scale_min, scale_max)?;
        let intervals = core(IntervalSet::new(set.label.clone(), set.intervals.clone()))?;
        let fz = core(FuzzyNumber::construct(&intervals, scale))?;
        *slot = Box::into_raw(Box::new(IaaFuzzyNumber(fz)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_free(fz: *mut IaaFuzzyNumber) {
    if !fz.is_null() {
        drop(Box::from_raw(fz));
    }
}

/// Membership grade at `x`; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_membership(fz: *const IaaFuzzyNumber, x: f64) -> f64 {
    fz.as_ref().map_or(0.0, |f| f.0.membership(x))
}

#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_region_count(fz: *const IaaFuzzyNumber) -> usize {
    fz.as_ref().map_or(0, |f| f.0.regions().len())
}

/// Copies region `index` (sorted by left, then right) into `out_region`.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_region(
    fz: *const IaaFuzzyNumber,
    index: usize,
    out_region: *mut IaaRegion,
) -> IaaStatus {
    guard(|| {
        let fz = as_ref(fz)?;
        let slot = out(out_region)?;
        let r = fz.0.regions().get(index).ok_or_else(|| {
            (IaaStatus::InvalidArgument, format!("region index {index} out of range"))
        })?;
        *slot = IaaRegion { left: r.left, right: r.right, height: r.height };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_centroid(
    fz: *const IaaFuzzyNumber,
    out_x: *mut f64,
    out_y: *mut f64,
) -> IaaStatus {
    guard(|| {
        let fz = as_ref(fz)?;
        let (x, y) = centroid(&fz.0);
        *out(out_x)? = x;
        *out(out_y)? = y;
        Ok(())
    })
}

unsafe fn scalar(fz: *const IaaFuzzyNumber, out_value: *mut f64, f: fn(&FuzzyNumber) -> f64) -> IaaStatus {
    guard(|| {
        let fz = as_ref(fz)?;
        *out(out_value)? = f(&fz.0);
        Ok(())
    })
}

/// Total area under the membership function.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_area(fz: *const IaaFuzzyNumber, out_value: *mut f64) -> IaaStatus {
    scalar(fz, out_value, area)
}

#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_height(fz: *const IaaFuzzyNumber, out_value: *mut f64) -> IaaStatus {
    scalar(fz, out_value, height)
}

/// Outline length, baseline included; an isolated spike counts twice its height.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_perimeter(fz: *const IaaFuzzyNumber, out_value: *mut f64) -> IaaStatus {
    scalar(fz, out_value, perimeter)
}

/// Area over the support hull width; the height when the hull is a point.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_agreement_ratio(
    fz: *const IaaFuzzyNumber,
    out_value: *mut f64,
) -> IaaStatus {
    scalar(fz, out_value, agreement_ratio)
}

/// JSON form of the fuzzy number; free with `iaa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn iaa_fuzzy_number_to_json(fz: *const IaaFuzzyNumber, out_json: *mut *mut c_char) -> IaaStatus {
    guard(|| {
        let fz = as_ref(fz)?;
        let slot = out(out_json)?;
        let json = fz.0.to_json();
        *slot = CString::new(json).expect("JSON has no nul bytes").into_raw();
        Ok(())
    })
}

/// Similarity of `a` and `b` under the default feature weights.
#[no_mangle]
pub unsafe extern "C" fn iaa_similarity(
    a: *const IaaFuzzyNumber,
    b: *const IaaFuzzyNumber,
    measure: IaaMeasure,
    out_value: *mut f64,
) -> IaaStatus {
    guard(|| {
        let (a, b) = (as_ref(a)?, as_ref(b)?);
        let slot = out(out_value)?;
        *slot = core(similarity(&a.0, &b.0, measure.into(), &SimilarityWeights::default()))?;
        Ok(())
    })
}

/// Universal order: writes 1 if `a` ranks above `b`, -1 if below, 0 if tied.
#[no_mangle]
pub unsafe extern "C" fn iaa_universal_compare(
    a: *const IaaFuzzyNumber,
    b: *const IaaFuzzyNumber,
    epsilon: f64,
    out_order: *mut i32,
) -> IaaStatus {
    guard(|| {
        let (a, b) = (as_ref(a)?, as_ref(b)?);
        let slot = out(out_order)?;
        if !(epsilon >= 0.0 && epsilon.is_finite()) {
            return Err((IaaStatus::InvalidArgument, "epsilon must be finite and >= 0".into()));
        }
        *slot = match core(universal_compare(&a.0, &b.0, epsilon))? {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        };
        Ok(())
    })
}

/// `S(fz, best) / (S(fz, best) + S(fz, worst))`; `IAA_STATUS_UNDEFINED` when
/// both similarities are zero.
#[no_mangle]
pub unsafe extern "C" fn iaa_ideal_ratio(
    fz: *const IaaFuzzyNumber,
    best: *const IaaFuzzyNumber,
    worst: *const IaaFuzzyNumber,
    measure: IaaMeasure,
    out_value: *mut f64,
) -> IaaStatus {
    guard(|| {
        let (fz, best, worst) = (as_ref(fz)?, as_ref(best)?, as_ref(worst)?);
        let slot = out(out_value)?;
        *slot = core(ideal_ratio(&fz.0, &best.0, &worst.0, measure.into(), &SimilarityWeights::default()))?;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::DivisionByZero { label: "x".into() }), IaaStatus::Undefined);
        assert_eq!(status_of(&Error::NonFinite), IaaStatus::InvalidInput);
        assert_eq!(status_of(&Error::InvalidArgument("x".into())), IaaStatus::InvalidArgument);
    }

    #[test]
    fn panics_become_internal() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, IaaStatus::Internal);
    }
}
