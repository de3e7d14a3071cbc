# from __future__ import annotations

from ._core import \
    ObjSense, \
    MatrixFormat, \
    HessianFormat, \
    SolutionStatus, \
    BasisValidity, \
    HighsModelStatus, \
    HighsPresolveStatus, \
    HighsBasisStatus, \
    HighsVarType, \
    HighsOptionType, \
    HighsInfoType, \
    HighsStatus, \
    HighsLogType, \
    HighsSparseMatrix, \
    HighsLp, \
    HighsHessian, \
    HighsModel, \
    HighsInfo, \
    HighsOptions, \
    _Highs, \
    HighsSolution, \
    HighsObjectiveSolution, \
    HighsBasis, \
    HighsRangingRecord, \
    HighsRanging, \
    kHighsInf, \
    kHighsIInf, \
    HIGHS_VERSION_MAJOR, \
    HIGHS_VERSION_MINOR, \
    HIGHS_VERSION_PATCH, \
    simplex_constants, \
    cb, \
    kSolutionStatusNone, \
    kSolutionStatusInfeasible, \
    kSolutionStatusFeasible, \
    kBasisValidityInvalid, \
    kBasisValidityValid

#    kMaximize, \
#    kColwise, \
#    kRowwise, \
#    kRowwisePartitioned, \
#    kTriangular, \
#    kSquare, \

#    kNotset, \
#    kLoadError, \
#    kModelError, \
#    kPresolveError, \
#    kSolveError, \
#    kPostsolveError, \
#    kModelEmpty, \
#    kOptimal, \
#    kInfeasible, \
#    kUnboundedOrInfeasible, \
#    kUnbounded, \
#    kObjectiveBound, \
#    kObjectiveTarget, \
#    kTimeLimit, \
#    kUnknown, \
#    kSolutionLimit, \
#    kInterrupt, \
#    kMemoryLimit, \
#    kNotPresolved, \
#    kNotReduced, \
#    kInfeasible, \
#    kUnboundedOrInfeasible, \
#    kReduced, \
#    kReducedToEmpty, \
#    kTimeout, \
#    kNullError, \
#    kOptionsError, \
#    kOutOfMemory, \
#    kLower, \
#    kBasic, \
#    kUpper, \
#    kZero, \
#    kNonbasic, \
#    kContinuous, \
#    kInteger, \
#    kSemiContinuous, \
#    kSemiInteger, \
#    kBool, \
#    kInt, \
#    kDouble, \
#    , \
#    , \
#    , \
#    , \
#    , \
#    , \
#    , \

from .highs import Highs

__all__ = ["__doc__",
           "__version__",
           "ObjSense",
           "MatrixFormat",
           "HessianFormat",
           "SolutionStatus",
           "BasisValidity",
           "HighsModelStatus",
           "HighsPresolveStatus",
           "HighsBasisStatus",
           "HighsVarType",
           "HighsOptionType",
           "HighsInfoType",
           "HighsStatus",
           "HighsLogType",
           "HighsSparseMatrix",
           "HighsLp",
           "HighsHessian",
           "HighsModel",
           "HighsInfo",
           "HighsOptions",
           "_Highs",
           "Highs",
           "HighsSolution",
           "HighsObjectiveSolution",
           "HighsBasis",
           "HighsRangingRecord",
           "HighsRanging",
           "kHighsInf",
           "kHighsIInf",
           "HIGHS_VERSION_MAJOR",
           "HIGHS_VERSION_MINOR",
           "HIGHS_VERSION_PATCH",
           "simplex_constants",
           "cb",
           #    "kMinimize",
           #    "kMaximize",
           #    "kColwise",
           #    "kRowwise",
           #    "kRowwisePartitioned",
           #    "kTriangular",
           #    "kSquare",
           "kSolutionStatusNone",
           "kSolutionStatusInfeasible",
           "kSolutionStatusFeasible",
           "kBasisValidityInvalid",
           "kBasisValidityValid",
           #    "kNotset",
           #    "kLoadError",
           #    "kModelError",
           #    "kPresolveError",
           #    "kSolveError",
           #    "kPostsolveError",
           #    "kModelEmpty",
           #    "kOptimal",
           #    "kInfeasible",
           #    "kUnboundedOrInfeasible",
           #    "kUnbounded",
           #    "kObjectiveBound",
           #    "kObjectiveTarget",
           #    "kTimeLimit",
           #    "kUnknown",
           #    "kSolutionLimit",
           #    "kInterrupt",
           #    "kMemoryLimit",
           #    "kNotPresolved",
           #    "kNotReduced",
           #    "kInfeasible",
           #    "kUnboundedOrInfeasible",
           #    "kReduced",
           #    "kReducedToEmpty",
           #    "kTimeout",
           #    "kNullError",
           #    "kOptionsError",
           #    "kOutOfMemory",
           #    "kLower",
           #    "kBasic",
           #    "kUpper",
           #    "kZero",
           #    "kNonbasic",
           #    "kContinuous",
           #    "kInteger",
           #    "kSemiContinuous",
           #    "kSemiInteger",
           #    "kBool",
           #    "kInt",
           #    "kDouble",
           #    "",
           #    "",
           #    "",
           #    "",
           #    "",
           #    "",
           #    "",
           ]
