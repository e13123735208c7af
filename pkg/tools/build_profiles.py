"""Emit the twelve bundled algorithm profiles as JSON.

The literals below are a transcription of the published tables; the JSON
files under ``src/pqcost/data/profiles`` are generated from them so that
the per-record provenance stays uniform.

    python tools/build_profiles.py src/pqcost/data/profiles
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

PROVENANCE = {
    "security_level": "Table 1 / Fig. 1 (highest-level reference model)",
    "rom": "Table 2 (n, p, q, r, s, Total_size as printed)",
    "ram": "Table 3 (n, p, q, r, s, Total_size as printed)",
    "multiplier_units": "Table 8 (SBM implementation at 500 MHz)",
    "mult_jobs": "Table 4 multiplication rows",
    "other_ops": "Table 4 rows without a modeled multiplier",
    "hash_cores": "Table 5 functions, output lengths from the per-algorithm hash notes, costs from Table 9",
}


def mem(rows, total):
    return {
        "instances": [dict(n=n, p=p, q=q, r_printed=r, s_printed=s) for n, p, q, r, s in rows],
        "total_printed": total,
    }


def unit(label, op1, op2, comb, seq, area, dyn, leak, estimated=False):
    return {
        "label": label, "architecture": "SBM", "op1_bits": op1, "op2_bits": op2,
        "combinational_cells": comb, "sequential_cells": seq,
        "cost": {"area_mm2": area, "dynamic_uW": dyn, "leakage_uW": leak, "estimated": estimated},
    }


def job(fn, method, op1, op2, op3, out, unit_label, operator="A x B", ntt_points=None):
    d = {"function_name": fn, "operator": operator, "method": method,
         "op1_bits": op1, "op2_bits": op2, "op3_bits": op3, "out_bits": out, "unit": unit_label}
    if ntt_points is not None:
        d["ntt_points"] = ntt_points
    return d


def other(fn, operator, method, op1, op2, op3, out, note):
    return {"function_name": fn, "operator": operator, "method": method,
            "op1_bits": op1, "op2_bits": op2, "op3_bits": op3, "out_bits": out, "note": note}


ADD_NOTE = "addition/subtraction; no modeled cost"


def core(fn, inst, area, dyn, leak, required=None, N="", S="", message_bits=256):
    d = {"function": fn, "instance_output_bits": inst,
         "required_output_bits": required if required is not None else inst,
         "message_bits": message_bits,
         "cost": {"area_mm2": area, "dynamic_uW": dyn, "leakage_uW": leak}}
    if N or S:
        d["N"] = N
        d["S"] = S
    return d


PROFILES = [
    dict(
        id="sntrup857", name="NTRU-Prime", reference_model="sntrup857", security_level=4,
        rom=mem([], 0.0),
        ram=mem([(1, 256, 8, 0.256, 0.256), (1, 24, 64, 0.192, 0.192)], 0.448),
        multiplier_units=[
            unit("12176x6088", 12176, 6088, 750152, 18278, 1.4124, 144073.8, 202.0082),
            unit("6088x6088", 6088, 6088, 435073, 12189, 0.8389, 100510.6, 125.3402),
        ],
        mult_jobs=[
            job("Rq_mult_small()", "SBM", 12176, 6088, None, 12176, "12176x6088"),
            job("Rq_mult()", "SBM", 6088, 6088, None, 6088, "6088x6088"),
        ],
        other_ops=[],
        hash_cores=[core("SHA2-512", 512, 0.0732, 18003.4, 1.6227, required=256)],
    ),
    dict(
        id="frodokem1344", name="FrodoKEM", reference_model="frodokem1344", security_level=5,
        rom=mem([], 0.0),
        ram=mem([(3, 10752, 16, 21.504, 64.512), (5, 64, 16, 0.128, 0.640)], 65.152),
        multiplier_units=[
            unit("172032x172032", 172032, 172032, None, 2329421, 22.1505, 51177810.0, 629.637,
                 estimated=True),
        ],
        mult_jobs=[
            job("frodo_mul_add_as_plus_e()", "SBM", 172032, 172032, 128, 172032, "172032x172032",
                operator="(C x A) + B"),
            job("frodo_mul_add_sa_plus_e()", "SBM", 172032, 172032, 128, 172032, "172032x172032",
                operator="(C x A) + B"),
            job("frodo_mul_add_sb_plus_e()", "SBM", 172032, 172032, 128, 128, "172032x172032",
                operator="(A x B) + C"),
            job("frodo_mul_bs()", "SBM", 172032, 172032, 128, 128, "172032x172032"),
        ],
        other_ops=[
            other("poly_add()", "A + B", "SBM", 128, 128, None, 128, ADD_NOTE),
            other("poly_sub()", "A - B", "SBM", 128, 128, None, 128, ADD_NOTE),
        ],
        hash_cores=[
            core("AES-128", 128, 0.0225, 6415.5, 0.3062),
            core("SHAKE-256", 1024, 0.1056, 18568.4, 3.6235, required=344064),
        ],
    ),
    dict(
        id="firesaber", name="Saber", reference_model="firesaber", security_level=5,
        rom=mem([], 0.0),
        ram=mem([
            (1, 32, 8, 0.032, 0.032), (2, 32, 16, 0.064, 0.128), (1, 128, 8, 0.128, 0.128),
            (1, 128, 16, 0.256, 0.256), (1, 64, 8, 0.064, 0.064), (1, 64, 16, 0.128, 0.128),
            (1, 4, 512, 0.256, 0.256), (1, 4, 1024, 0.512, 0.512), (1, 4, 256, 0.128, 0.128),
            (1, 4, 512, 0.256, 0.256),
        ], 1.888),
        multiplier_units=[unit("4096x4096", 4096, 4096, 206941, 8205, 0.4599, 66433.2, 42.4874)],
        mult_jobs=[
            job("karatsuba_simple()", "KM2", 4096, 4096, None, 4096, "4096x4096"),
            job("toom_cook_4way()", "TCM4", 4096, 4096, None, 4096, "4096x4096"),
        ],
        other_ops=[],
        hash_cores=[
            core("SHAKE-128", 768, 0.1101, 19379.2, 3.1528),
            core("SHA3-256", 256, 0.1062, 18568.1, 4.2955),
            core("SHA3-512", 512, 0.0984, 15927.1, 3.2830),
        ],
    ),
    dict(
        id="hps4096821", name="NTRU", reference_model="hps4096821", security_level=5,
        rom=mem([], 0.0),
        ram=mem([(14, 821, 16, 1.642, 22.988)], 22.988),
        multiplier_units=[unit("11216x11216", 11216, 11216, 821229, 22446, 1.5602, 163509.7, 207.3250)],
        mult_jobs=[
            job("poly_Rq_mul()", "KM2", 11216, 11216, None, 11216, "11216x11216"),
            job("poly_Sq_mul()", "TCM4", 11216, 11216, None, 11216, "11216x11216"),
        ],
        other_ops=[
            other("poly_S3_inv()", "1/A", "almost-inverse", 11216, None, None, 11216,
                  "polynomial inversion; outside the multiplier model"),
        ],
        hash_cores=[core("SHA3-256", 256, 0.1062, 18568.1, 4.2955)],
    ),
    dict(
        id="papabearephem", name="ThreeBears", reference_model="papabearephem", security_level=5,
        rom=mem([], 0.0),
        ram=mem([
            (1, 40, 8, 0.040, 0.040), (1, 1584, 8, 1.584, 1.584), (1, 1697, 8, 1.697, 1.697),
            (1, 24, 8, 0.024, 0.024), (2, 32, 8, 0.032, 0.064),
        ], 3.409),
        multiplier_units=[unit("3120x3120", 3120, 3120, 141422, 6252, 0.3192, 58829.7, 30.8762)],
        mult_jobs=[job("mac()", "KM2", 3120, 3120, None, 3120, "3120x3120", operator="+= A x B")],
        other_ops=[],
        hash_cores=[core("cSHAKE-256", 256, 0.1055, 18568.4, 3.6235, S="ThreeBears")],
    ),
    dict(
        id="r5nD-5pke-5d", name="Round5", reference_model="r5nD-5pke-5d", security_level=5,
        rom=mem([], 0.0),
        ram=mem([(2, 16, 8, 0.016, 0.032), (1, 32, 8, 0.032, 0.032)], 0.064),
        multiplier_units=[unit("15136x6208", 15136, 6208, 902623, 21358, 1.6785, 164367.2, 230.1910)],
        mult_jobs=[
            job("ringmul_p()", "SBM", 15136, 6208, None, 7840, "15136x6208"),
            job("ringmul_p()", "SBM", 15136, 6208, None, 15136, "15136x6208"),
        ],
        other_ops=[],
        hash_cores=[
            core("cSHAKE-256", 256, 0.1055, 18568.4, 3.6235),
            core("AES-256", 128, 0.0395, 13562.1, 0.4472, required=256),
        ],
    ),
    dict(
        id="dilithium4-AES", name="Crystals-Dilithium", reference_model="dilithium4-AES",
        security_level=4,
        rom=mem([], 0.0),
        ram=mem([(3, 256, 32, 1.024, 3.072)], 3.072),
        multiplier_units=[unit("8192x8192", 8192, 8192, 592155, 16398, 1.1251, 123343.3, 139.4685)],
        mult_jobs=[
            job("poly_pointwise_invmontgomery()", "NTT", 8192, 8192, None, 8192, "8192x8192",
                ntt_points=256),
        ],
        other_ops=[
            other("poly_add()", "A + B", "SBM", 8192, 8192, None, 8192, ADD_NOTE),
            other("poly_sub()", "A - B", "SBM", 8192, 8192, None, 8192, ADD_NOTE),
        ],
        hash_cores=[
            core("SHAKE-128", 256, 0.1103, 19649.9, 4.4626),
            core("SHAKE-256", 384, 0.1056, 18556.2, 3.5285),
        ],
    ),
    dict(
        id="kyber1024-90s", name="Crystals-KYBER", reference_model="kyber1024-90s", security_level=5,
        rom=mem([(2, 128, 16, 0.256, 0.512)], 0.512),
        ram=mem([(5, 256, 16, 0.512, 2.560), (1, 128, 16, 0.256, 0.256)], 2.816),
        multiplier_units=[unit("3072x3072", 3072, 3072, 131973, 6156, 0.3069, 51800.5, 31.9299)],
        mult_jobs=[job("poly_basemul()", "NTT", 3072, 3072, None, 3072, "3072x3072", ntt_points=256)],
        other_ops=[
            other("poly_add()", "A + B", "SBM", 3072, 3072, None, 3072, ADD_NOTE),
            other("poly_sub()", "A - B", "SBM", 3072, 3072, None, 3072, ADD_NOTE),
        ],
        hash_cores=[
            core("AES-256", 128, 0.0395, 13562.1, 0.4472, required=256),
            core("SHA2-256", 256, 0.0362, 8881.4, 0.4671),
            core("SHA2-512", 512, 0.0732, 18003.4, 1.6227),
            core("SHAKE-256", 256, 0.1055, 18568.4, 3.6235),
        ],
    ),
    dict(
        id="newhope1024cca", name="NewHope", reference_model="newhope1024cca", security_level=5,
        rom=mem([(4, 1024, 16, 2.048, 8.192)], 8.192),
        ram=mem([(8, 1024, 16, 2.048, 16.384)], 16.384),
        multiplier_units=[unit("16384x16384", 16384, 16384, 1302689, 32783, 2.4760, 230704.9, 446.6865)],
        mult_jobs=[
            job("poly_mul_pointwise()", "NTT", 16384, 16384, None, 16384, "16384x16384",
                ntt_points=1024),
        ],
        other_ops=[
            other("poly_add()", "A + B", "SBM", 128, 128, None, 128, ADD_NOTE),
            other("poly_sub()", "A - B", "SBM", 128, 128, None, 128, ADD_NOTE),
        ],
        hash_cores=[
            core("SHAKE-128", 1600, 0.1103, 19649.9, 4.4626),
            core("SHAKE-256", 1024, 0.1055, 18555.9, 3.4193),
        ],
    ),
    dict(
        id="lac256", name="LAC", reference_model="lac256", security_level=5,
        rom=mem([(2, 512, 16, 1.024, 2.048), (1, 5120, 32, 20.480, 20.480)], 22.528),
        ram=mem([(1, 2080, 8, 2.080, 2.080), (1, 1056, 8, 1.056, 1.056), (1, 1024, 8, 1.424, 1.424)],
                4.560),
        multiplier_units=[unit("8192x8192", 8192, 8192, 592155, 16398, 1.1251, 123343.3, 139.4685)],
        mult_jobs=[
            job("poly_aff()", "SBM", 8192, 8192, 8192, 8192, "8192x8192"),
            job("poly_mul()", "SBM", 8192, 8192, 32, 8192, "8192x8192", operator="(A x B) + C"),
        ],
        other_ops=[],
        hash_cores=[],
    ),
    dict(
        id="qtesla-p-III", name="qTesla", reference_model="qtesla-p-III", security_level=3,
        rom=mem([(1, 444, 32, 1.776, 1.776), (1, 224, 64, 1.792, 1.792), (2, 2048, 36, 9.216, 18.432)],
                22.000),
        ram=mem([
            (1, 2048, 8, 2.048, 2.048), (1, 9600, 32, 38.400, 38.400), (1, 10240, 32, 49.960, 40.960),
            (1, 1408, 32, 5.632, 5.632), (4, 2048, 64, 16.384, 65.536),
        ], 152.576),
        multiplier_units=[unit("16384x16384", 16384, 16384, 1302689, 32783, 2.4760, 230704.9, 446.6865)],
        mult_jobs=[job("poly_mul()", "NTT", 16384, 16384, None, 16384, "16384x16384", ntt_points=1024)],
        other_ops=[
            other("poly_add()", "A + B", "SBM", 16384, 16384, None, 16384, ADD_NOTE),
            other("poly_sub_reduce()", "A - B", "SBM", 16384, 16384, None, 16384, ADD_NOTE),
        ],
        hash_cores=[
            core("SHAKE-256", 256, 0.1056, 18568.4, 3.6235),
            core("cSHAKE-128", 256, 0.1103, 19649.9, 4.4626),
            core("cSHAKE-256", 256, 0.1055, 18568.4, 3.6235),
        ],
    ),
    dict(
        id="falcon1024", name="Falcon", reference_model="falcon1024", security_level=5,
        rom=mem([
            (1, 540, 64, 4.320, 4.320), (1, 1080, 16, 2.160, 2.160), (2, 31, 64, 0.248, 0.496),
            (2, 27, 64, 0.216, 0.432), (2, 30, 64, 0.240, 0.480), (2, 1024, 16, 2.048, 4.096),
            (2, 32, 16, 0.512, 1.024), (2, 64, 16, 1.024, 2.048), (2, 1024, 8, 1.024, 2.048),
            (2, 256, 8, 0.256, 0.512), (2, 512, 8, 0.512, 1.024),
        ], 12.160),
        ram=mem([(5, 1024, 16, 2.048, 10.240), (6, 521, 32, 2.084, 12.504)], 22.744),
        multiplier_units=[
            unit("32x32", 32, 32, 1001, 70, 0.0024, 581.5, 0.2499),
            unit("24576x24576", 24576, 24576, 2926129, 49167, 5.4670, 327836.5, 1410.9000),
        ],
        mult_jobs=[
            job("mq_poly_montymul_ntt()", "MONTGOMERY", 24576, 24576, None, 24576, "24576x24576"),
            job("mq_montymul()", "MONTGOMERY", 32, 32, 32, 32, "32x32"),
        ],
        other_ops=[other("mq_poly_sub()", "A - B", "SBM", 24576, 24576, None, 24576, ADD_NOTE)],
        hash_cores=[core("SHAKE-256", 64, 0.1056, 18559.8, 3.4941)],
    ),
]


def main(out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for profile in PROFILES:
        doc = {"provenance": PROVENANCE, **profile}
        (out / f"{profile['id']}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/pqcost/data/profiles")
