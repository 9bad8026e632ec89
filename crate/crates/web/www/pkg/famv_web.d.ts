/* tslint:disable */
/* eslint-disable */

export class Curves {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    ae(i: number): Float64Array;
    fe(i: number): Float64Array;
    is_empty(): boolean;
    len(): number;
    name(i: number): string;
}

export function attractiveness(gamma: number, r: number): number;

/**
 * Returns `[r_h…, r_g…]`, `pairs` values each.
 */
export function distanceSample(problem: string, dim: number, pairs: number, seed: number): Float64Array;

export function replacementCurve(alpha_init: number, alpha_max: number, k: number, adaptive: boolean, n: number): Float64Array;

/**
 * `algorithms` is a comma-separated list of registry names.
 */
export function runConvergence(problem: string, algorithms: string, dim: number, budget: number, seed: number): Curves;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curves_free: (a: number, b: number) => void;
    readonly attractiveness: (a: number, b: number) => number;
    readonly curves_ae: (a: number, b: number) => [number, number];
    readonly curves_fe: (a: number, b: number) => [number, number];
    readonly curves_is_empty: (a: number) => number;
    readonly curves_len: (a: number) => number;
    readonly curves_name: (a: number, b: number) => [number, number];
    readonly distanceSample: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly replacementCurve: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly runConvergence: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
