import asyncio
import time

from mapkit.mapkit import mapkit_solve
from mapkit.models.solve_result import SolveResult

problem = "longest-cycle"

files = []


def example_report(path: str, result: SolveResult) -> None:
    print(path, result.answer_text, result.stats.max_states)


async def process_file(path: str, semaphore: asyncio.Semaphore):
    async with semaphore:
        result = await mapkit_solve(problem=problem, path=path, k=5)
        example_report(path, result)


async def main():
    semaphore = asyncio.Semaphore(10)
    tasks = []
    for path in files:
        task = asyncio.create_task(process_file(path, semaphore))
        tasks.append(task)
    await asyncio.gather(*tasks)


if __name__ == "__main__":
    start_time = time.time()
    asyncio.run(main())
    print("Execution time:", time.time() - start_time, "seconds")
