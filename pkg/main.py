import asyncio

from rigidity_lab import RigidityLab


async def main(experiment: str, params: dict, output_dir: str) -> None:
    lab = RigidityLab()
    await lab.run(experiment=experiment, params=params, output_dir=output_dir)


if __name__ == '__main__':
    experiment = 'hyperoctahedral'
    params = {'min_n': 6, 'max_n': 16, 'seed': 0}
    output_dir = './output'

    asyncio.run(main(experiment, params, output_dir))
